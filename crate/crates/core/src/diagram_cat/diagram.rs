use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::SetPartition;
use crate::error::{Error, Result};

/// Disjoint-set forest with path compression and union by size.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }

    /// Joins the images of each block of `blocks` under `place`.
    fn glue(&mut self, blocks: &SetPartition, place: impl Fn(usize) -> usize) {
        let mut first = vec![usize::MAX; blocks.num_blocks()];
        for (s, &b) in blocks.rgs().iter().enumerate() {
            let node = place(s);
            if first[b] == usize::MAX {
                first[b] = node;
            } else {
                self.union(first[b], node);
            }
        }
    }
}

/// A partition diagram: a set partition of `top + bottom` strands.
///
/// Strand `i < top` is the top vertex `t{i+1}`, strand `top + j` the bottom
/// vertex `b{j+1}`. The top row is the source and the bottom row the target,
/// so `g ∘ f` identifies the bottom row of `f` with the top row of `g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionDiagram {
    top: usize,
    bottom: usize,
    blocks: SetPartition,
}

impl PartitionDiagram {
    pub fn new(top: usize, bottom: usize, blocks: SetPartition) -> Result<Self> {
        if blocks.ground_size() != top + bottom {
            return Err(Error::InvalidDiagram(format!(
                "{} strands do not match {top} + {bottom}",
                blocks.ground_size()
            )));
        }
        Ok(PartitionDiagram { top, bottom, blocks })
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn blocks(&self) -> &SetPartition {
        &self.blocks
    }

    /// The identity diagram on `n` strands: blocks {t_i, b_i}.
    pub fn identity(n: usize) -> Self {
        let labels: Vec<usize> = (0..2 * n).map(|s| s % n.max(1)).collect();
        PartitionDiagram { top: n, bottom: n, blocks: SetPartition::from_labels(&labels) }
    }

    /// All vertices in singleton blocks.
    pub fn discrete(top: usize, bottom: usize) -> Self {
        PartitionDiagram { top, bottom, blocks: SetPartition::discrete(top + bottom) }
    }

    /// Diagram of the permutation σ (0-based images): blocks {t_i, b_σ(i)}.
    pub fn permutation(sigma: &[usize]) -> Result<Self> {
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &s in sigma {
            if s >= n || std::mem::replace(&mut seen[s], true) {
                return Err(Error::InvalidPermutation(n));
            }
        }
        let mut labels = vec![0; 2 * n];
        for (i, &s) in sigma.iter().enumerate() {
            labels[i] = i;
            labels[n + s] = i;
        }
        Ok(PartitionDiagram { top: n, bottom: n, blocks: SetPartition::from_labels(&labels) })
    }

    pub fn strand_label(&self, s: usize) -> String {
        if s < self.top {
            format!("t{}", s + 1)
        } else {
            format!("b{}", s - self.top + 1)
        }
    }

    fn parse_label(&self, label: &str) -> Result<usize> {
        let bad = || Error::InvalidDiagram(format!("bad strand label {label:?}"));
        let (row, idx) = label.split_at(1.min(label.len()));
        let idx: usize = idx.parse().map_err(|_| bad())?;
        match (row, idx) {
            ("t", i) if (1..=self.top).contains(&i) => Ok(i - 1),
            ("b", i) if (1..=self.bottom).contains(&i) => Ok(self.top + i - 1),
            _ => Err(bad()),
        }
    }

    pub fn labeled_blocks(&self) -> Vec<Vec<String>> {
        self.blocks
            .blocks()
            .into_iter()
            .map(|b| b.into_iter().map(|s| self.strand_label(s)).collect())
            .collect()
    }

    pub fn from_labeled_blocks(top: usize, bottom: usize, blocks: &[Vec<String>]) -> Result<Self> {
        let shell = PartitionDiagram::discrete(top, bottom);
        let idx = blocks
            .iter()
            .map(|b| b.iter().map(|l| shell.parse_label(l)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(top, bottom, SetPartition::from_blocks(top + bottom, &idx)?)
    }

    /// Stacks `self` after `f` (the composite `self ∘ f`). Returns the
    /// resulting diagram and the number of components lying entirely in the
    /// middle row, each of which contributes a factor `T`.
    pub fn compose_after(&self, f: &PartitionDiagram) -> Result<(PartitionDiagram, usize)> {
        let g = self;
        if f.bottom != g.top {
            return Err(Error::SizeMismatch(format!(
                "cannot compose: f has {} bottom strands, g has {} top strands",
                f.bottom, g.top
            )));
        }
        let (outer_top, mid, outer_bottom) = (f.top, f.bottom, g.bottom);
        let total = outer_top + mid + outer_bottom;
        let mut uf = UnionFind::new(total);
        uf.glue(&f.blocks, |s| s);
        uf.glue(&g.blocks, |s| outer_top + s);
        let outer: Vec<usize> = (0..outer_top)
            .chain(outer_top + mid..total)
            .map(|x| uf.find(x))
            .collect();
        let mut closed: Vec<usize> = (outer_top..outer_top + mid)
            .map(|x| uf.find(x))
            .filter(|r| !outer.contains(r))
            .collect();
        closed.sort_unstable();
        closed.dedup();
        let blocks = SetPartition::from_labels(&outer);
        Ok((PartitionDiagram { top: outer_top, bottom: outer_bottom, blocks }, closed.len()))
    }

    /// Horizontal juxtaposition: `self` on the left, `other` on the right.
    pub fn tensor(&self, other: &PartitionDiagram) -> PartitionDiagram {
        let (t1, b1, t2) = (self.top, self.bottom, other.top);
        let top = t1 + t2;
        let bottom = b1 + other.bottom;
        let mut labels = vec![0; top + bottom];
        let shift = self.blocks.num_blocks();
        for (s, &b) in self.blocks.rgs().iter().enumerate() {
            let pos = if s < t1 { s } else { top + (s - t1) };
            labels[pos] = b;
        }
        for (s, &b) in other.blocks.rgs().iter().enumerate() {
            let pos = if s < t2 { t1 + s } else { top + b1 + (s - t2) };
            labels[pos] = shift + b;
        }
        PartitionDiagram { top, bottom, blocks: SetPartition::from_labels(&labels) }
    }

    /// Number of connected components after joining `t_i` to `b_i` for every i.
    pub fn closure_components(&self) -> Result<usize> {
        if self.top != self.bottom {
            return Err(Error::NotEndomorphism { top: self.top, bottom: self.bottom });
        }
        let n = self.top;
        let mut uf = UnionFind::new(n);
        uf.glue(&self.blocks, |s| s % n);
        let mut roots: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
        roots.sort_unstable();
        roots.dedup();
        Ok(roots.len())
    }
}

impl fmt::Debug for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.labeled_blocks().iter().map(|b| b.join(",")).collect();
        write!(f, "{{{}}}", blocks.iter().map(|b| format!("{{{b}}}")).collect::<Vec<_>>().join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramWire {
    top: usize,
    bottom: usize,
    blocks: Vec<Vec<String>>,
}

impl Serialize for PartitionDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramWire { top: self.top, bottom: self.bottom, blocks: self.labeled_blocks() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PartitionDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = DiagramWire::deserialize(d)?;
        PartitionDiagram::from_labeled_blocks(w.top, w.bottom, &w.blocks).map_err(serde::de::Error::custom)
    }
}
