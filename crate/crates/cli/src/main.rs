mod tspec;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use repst::characters::{
    character_value, generator_power_multiplicities, induction_multiplicity, lr_coefficient,
    stable_tensor_multiplicity,
};
use repst::combinatorics::{hook_dimension, Partition};
use repst::diagram_cat::{end_dimension, gram_det, Basis, DiagramMorphism};
use repst::exact_arith::{
    binomial_basis_coefficients, content_polynomial, factor_rational_roots, is_integer_valued,
    is_integer_valued_binomial, q_polynomial, AlgebraicNumber, CofactorStatus, RationalPolynomial,
};
use repst::interp::{
    chi_schur_both_ways, euler_char_simple, generator_power_report, is_integral_type, reproduce_counterexample,
    schur_idempotent, search_counterexample, tensor_decompose_at, InterpolationPoint, SearchOutcome,
    VirtualObject,
};
use repst::superlinear::{
    etale_implies_even_check, is_etale, odd_certificate, schur_vanishes_super, super_schur_dim, supertrace_form,
    SuperAlgebraPresentation, SuperDim,
};

/// Exact computations in Deligne's categories Rep(S_t) and for the
/// symmetric groups.
#[derive(Parser)]
#[command(name = "repst", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of the irreducible representation V_λ.
    Dim { lambda: Partition },
    /// Character value χ_λ on the class of cycle type ρ.
    Char { lambda: Partition, rho: Partition },
    /// Content polynomial ∏ (T + j − i) over the cells of λ.
    Cp { lambda: Partition },
    /// Dimension polynomial Q_λ(T), the Euler characteristic of [λ]_T.
    Qpoly { lambda: Partition },
    /// Test whether a polynomial (ascending coefficients, e.g. 0,1/2,1/2) is integer-valued.
    Ivp { coeffs: String },
    /// Euler characteristic of S_λ X by the cycle sum and by the content polynomial.
    ChiSchur {
        lambda: Partition,
        /// χ(X) as int:k, rat:a/b or alg:MODULUS:REP; symbolic T if omitted.
        #[arg(long, value_parser = tspec::parse_t_spec)]
        chi: Option<InterpolationPoint>,
    },
    /// Littlewood–Richardson coefficient c^ν_{λμ}.
    Lr { lambda: Partition, mu: Partition, nu: Partition },
    /// Multiplicity of V_ν in the induction product of V_λ and V_μ.
    Induct { lambda: Partition, mu: Partition, nu: Partition },
    /// Multiplicity of [ν] in [λ] ⊗ [μ] for generic t.
    StableKron { lambda: Partition, mu: Partition, nu: Partition },
    /// Decomposition of [1]^{⊗n} for generic t.
    GenPower { n: usize },
    /// Partition category operations.
    #[command(subcommand)]
    Palg(Palg),
    /// The central idempotent 𝔡_λ acting on |λ| strands.
    SchurIdem { lambda: Partition },
    /// Euler characteristic χ([λ]_t).
    Euler {
        lambda: Partition,
        #[arg(long, value_parser = tspec::parse_t_spec)]
        t: InterpolationPoint,
    },
    /// Decomposition of [λ]_t ⊗ [μ]_t.
    TensorDecomp {
        lambda: Partition,
        mu: Partition,
        #[arg(long, value_parser = tspec::parse_t_spec)]
        t: InterpolationPoint,
    },
    /// Whether an object (JSON list of {"partition","mult"}) is of integral type at t.
    Integrality {
        #[arg(long)]
        object: PathBuf,
        #[arg(long, value_parser = tspec::parse_t_spec)]
        t: InterpolationPoint,
    },
    /// Dimension of S_λ on a (p|q)-dimensional super vector space.
    SuperSchur { lambda: Partition, p: usize, q: usize },
    /// Supertrace forms of one algebra or a JSON array of algebras.
    EtaleCheck { file: PathBuf },
    /// Rebuild the integral object whose tensor square is not integral.
    #[command(alias = "section7")]
    Counterexample,
    /// Look for t with [λ]_t integral of Euler characteristic `target` but [λ]_t ⊗ [λ]_t not.
    SearchCx {
        lambda: Partition,
        #[arg(long, allow_negative_numbers = true)]
        target: i64,
    },
}

#[derive(Subcommand)]
enum Palg {
    /// G ∘ F for morphism files G and F (both diagram or both orbit basis).
    Compose { g: PathBuf, f: PathBuf },
    /// Trace of an endomorphism.
    Trace { file: PathBuf },
    /// Determinant of the Gram form on End of n strands.
    Gram { n: usize },
    /// Number of partition diagrams on n + n strands.
    EndDim { n: usize },
    /// Rewrite a diagram-basis morphism in the orbit basis.
    ToOrbit { file: PathBuf },
}

/// Failures reported to the user: bad input (exit 2) or a refused or failed
/// computation (exit 1).
enum Failure {
    Usage(String),
    Refused(String),
}

impl From<repst::Error> for Failure {
    fn from(e: repst::Error) -> Self {
        match e {
            repst::Error::Parse(_) | repst::Error::InvalidPartition(_) => Failure::Usage(e.to_string()),
            _ => Failure::Refused(e.to_string()),
        }
    }
}

type Outcome = Result<(Value, String), Failure>;

fn big(n: &BigUint) -> Value {
    n.to_u64().map_or_else(|| Value::String(n.to_string()), Value::from)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn poly_json(p: &RationalPolynomial) -> Value {
    let f = factor_rational_roots(p);
    let factored = (f.status == CofactorStatus::Constant || f.status == CofactorStatus::IrreducibleQuadratic)
        .then(|| f.to_string());
    json!({ "poly": p, "expanded": p.to_string(), "factored": factored })
}

fn poly_text(p: &RationalPolynomial) -> String {
    let f = factor_rational_roots(p);
    let factored = f.to_string();
    let known = matches!(f.status, CofactorStatus::Constant | CofactorStatus::IrreducibleQuadratic);
    if known && !p.is_zero() && factored != p.to_string() {
        format!("{p}\n  = {factored}")
    } else {
        p.to_string()
    }
}

fn warn_reducible(t: &InterpolationPoint) {
    if t.modulus_is_reducible() {
        eprintln!("warning: modulus {} has rational roots; ℚ[T]/(m) is not a field", t.value().modulus());
    }
}

fn morphism_text(m: &DiagramMorphism) -> String {
    format!("{m:?}")
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Dim { lambda } => {
            let d = hook_dimension(&lambda);
            Ok((json!({ "partition": lambda, "dim": big(&d) }), d.to_string()))
        }
        Command::Char { lambda, rho } => {
            let v = character_value(&lambda, &rho)?;
            Ok((json!({ "lambda": lambda, "rho": rho, "value": v }), v.to_string()))
        }
        Command::Cp { lambda } => {
            let p = content_polynomial(&lambda);
            Ok((json!({ "partition": lambda, "content_polynomial": poly_json(&p) }), poly_text(&p)))
        }
        Command::Qpoly { lambda } => {
            let p = q_polynomial(&lambda);
            Ok((json!({ "partition": lambda, "q_polynomial": poly_json(&p) }), poly_text(&p)))
        }
        Command::Ivp { coeffs } => {
            let p = tspec::parse_coeffs(&coeffs)?;
            let by_values = is_integer_valued(&p);
            if by_values != is_integer_valued_binomial(&p) {
                return Err(repst::Error::CrossCheck("integer-valuedness tests disagree".into()).into());
            }
            let binom: Vec<String> = binomial_basis_coefficients(&p).iter().map(|c| c.to_string()).collect();
            let text = format!("{by_values}\nbinomial coefficients: [{}]", binom.join(", "));
            Ok((json!({ "poly": p, "integer_valued": by_values, "binomial_coefficients": binom }), text))
        }
        Command::ChiSchur { lambda, chi } => {
            let (a, b, shown) = match chi {
                None => {
                    let (a, b) = chi_schur_both_ways(&lambda, &RationalPolynomial::t());
                    (a.to_string(), b.to_string(), "T".to_string())
                }
                Some(t) => {
                    warn_reducible(&t);
                    let (a, b): (AlgebraicNumber, AlgebraicNumber) = chi_schur_both_ways(&lambda, t.value());
                    (a.to_string(), b.to_string(), t.to_string())
                }
            };
            let agree = a == b;
            let text = format!("cycle sum:          {a}\ncontent polynomial: {b}\nagree: {agree}");
            Ok((json!({ "partition": lambda, "chi": shown, "cycle_sum": a, "content": b, "agree": agree }), text))
        }
        Command::Lr { lambda, mu, nu } => {
            let c = lr_coefficient(&lambda, &mu, &nu);
            Ok((json!({ "lambda": lambda, "mu": mu, "nu": nu, "value": c }), c.to_string()))
        }
        Command::Induct { lambda, mu, nu } => {
            let c = induction_multiplicity(&lambda, &mu, &nu)?;
            Ok((json!({ "lambda": lambda, "mu": mu, "nu": nu, "value": c }), c.to_string()))
        }
        Command::StableKron { lambda, mu, nu } => {
            let c = stable_tensor_multiplicity(&lambda, &mu, &nu)?;
            Ok((json!({ "lambda": lambda, "mu": mu, "nu": nu, "value": c }), c.to_string()))
        }
        Command::GenPower { n } => {
            let r = if n <= repst::interp::GENERATOR_POWER_BOUND {
                serde_json::to_value(generator_power_report(n)?).expect("reports serialize")
            } else {
                let m = generator_power_multiplicities(n)?;
                json!({ "n": n, "multiplicities": VirtualObject::new(m) })
            };
            let mut text: Vec<String> = r["multiplicities"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|e| {
                    let parts: Vec<String> =
                        e["partition"].as_array().into_iter().flatten().map(|x| x.to_string()).collect();
                    let p = if parts.is_empty() { "∅".into() } else { format!("({})", parts.join(",")) };
                    format!("{p}: {}", e["mult"])
                })
                .collect();
            if let Some(len) = r.get("length") {
                text.push(format!("length: {len}"));
                text.push(format!("dim End: {} = Bell({})", r["end_dimension"], 2 * n));
            }
            Ok((r, text.join("\n")))
        }
        Command::Palg(p) => run_palg(p),
        Command::SchurIdem { lambda } => {
            let d = schur_idempotent(&lambda)?;
            let trace = d.trace()?;
            let text = format!("{}\nzero: {}\ntrace: {}", morphism_text(&d), d.is_zero(), trace);
            Ok((json!({ "partition": lambda, "morphism": d, "is_zero": d.is_zero(), "trace": trace }), text))
        }
        Command::Euler { lambda, t } => {
            warn_reducible(&t);
            let chi = euler_char_simple(&lambda, &t)?;
            let integral = chi.is_rational_integer();
            Ok((
                json!({ "partition": lambda, "t": t, "chi": chi, "chi_text": chi.to_string(), "integral": integral }),
                chi.to_string(),
            ))
        }
        Command::TensorDecomp { lambda, mu, t } => {
            warn_reducible(&t);
            let x = tensor_decompose_at(&VirtualObject::simple(lambda), &VirtualObject::simple(mu), &t)?;
            let text: Vec<String> = x.terms().iter().map(|(p, k)| format!("{p}: {k}")).collect();
            Ok((json!({ "decomposition": x }), text.join("\n")))
        }
        Command::Integrality { object, t } => {
            warn_reducible(&t);
            let x: VirtualObject = read_json(&object)?;
            let v = is_integral_type(&x, &t)?;
            let text = match &v.witness {
                None => "integral: true".to_string(),
                Some(w) => format!("integral: false\nwitness: {} with χ = {}", w.partition, w.chi),
            };
            Ok((serde_json::to_value(&v).expect("verdicts serialize"), text))
        }
        Command::SuperSchur { lambda, p, q } => {
            let d = SuperDim::new(p, q);
            let dim = super_schur_dim(&lambda, d)?;
            let vanishes = schur_vanishes_super(&lambda, d);
            Ok((
                json!({ "partition": lambda, "p": p, "q": q, "dim": dim, "rectangle_criterion": vanishes }),
                format!("{dim}\nrectangle criterion: {vanishes}"),
            ))
        }
        Command::EtaleCheck { file } => {
            let value: Value = read_json(&file)?;
            let algebras: Vec<SuperAlgebraPresentation> = match value {
                Value::Array(_) => serde_json::from_value(value),
                other => serde_json::from_value(other).map(|a| vec![a]),
            }
            .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            let mut entries = Vec::new();
            let mut lines = Vec::new();
            for (i, a) in algebras.iter().enumerate() {
                let form: Vec<Vec<String>> =
                    supertrace_form(a).iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
                let etale = is_etale(a);
                let cert = odd_certificate(a);
                lines.push(format!("#{i} ({}|{}): etale {etale}, odd certificate {}", a.p(), a.q(), cert.holds()));
                entries.push(json!({ "p": a.p(), "q": a.q(), "form": form, "etale": etale, "odd_certificate": cert }));
            }
            let ok = etale_implies_even_check(&algebras);
            lines.push(format!("etale implies even: {ok}"));
            Ok((json!({ "algebras": entries, "etale_implies_even": ok }), lines.join("\n")))
        }
        Command::Counterexample => {
            let r = reproduce_counterexample()?;
            let mut lines: Vec<String> = r.steps.iter().map(|s| format!("{}: {}", s.name, s.value)).collect();
            lines.push(format!("witness: {}", r.witness));
            lines.push(format!("verdict: {}", r.verdict));
            Ok((serde_json::to_value(&r).expect("reports serialize"), lines.join("\n")))
        }
        Command::SearchCx { lambda, target } => {
            let outcome = search_counterexample(&lambda, target)?;
            let text = match &outcome {
                SearchOutcome::Found(c) => format!(
                    "found: t = {} (modulus {}), witness {} with χ = {}",
                    c.point,
                    c.point.value().modulus(),
                    c.witness,
                    c.chi
                ),
                SearchOutcome::NoneFound => "none found".into(),
                SearchOutcome::Undecided { cofactor } => format!("undecided: cofactor {cofactor}"),
            };
            Ok((serde_json::to_value(&outcome).expect("outcomes serialize"), text))
        }
    }
}

fn run_palg(cmd: Palg) -> Outcome {
    match cmd {
        Palg::Compose { g, f } => {
            let g: DiagramMorphism = read_json(&g)?;
            let f: DiagramMorphism = read_json(&f)?;
            let h = match g.basis() {
                Basis::Diagram => g.compose(&f)?,
                Basis::Orbit => g.compose_orbit(&f)?,
            };
            Ok((serde_json::to_value(&h).expect("morphisms serialize"), morphism_text(&h)))
        }
        Palg::Trace { file } => {
            let f: DiagramMorphism = read_json(&file)?;
            let t = f.trace()?;
            Ok((json!({ "trace": poly_json(&t) }), poly_text(&t)))
        }
        Palg::Gram { n } => {
            let det = gram_det(n)?;
            let f = factor_rational_roots(&det);
            let roots: Vec<Value> = f.roots.iter().map(|(r, k)| json!([r.to_string(), k])).collect();
            let natural = f.splits_over_naturals();
            let size = end_dimension(n)?;
            Ok((
                json!({ "n": n, "basis_size": size, "det": det, "factored": f.to_string(), "roots": roots, "roots_in_naturals": natural }),
                format!("{f}\nbasis size: {size}\nroots in ℕ: {natural}"),
            ))
        }
        Palg::EndDim { n } => {
            let d = end_dimension(n)?;
            Ok((json!({ "n": n, "dim": d as u64 }), d.to_string()))
        }
        Palg::ToOrbit { file } => {
            let f: DiagramMorphism = read_json(&file)?;
            let x = f.to_orbit_basis()?;
            Ok((serde_json::to_value(&x).expect("morphisms serialize"), morphism_text(&x)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_mode = cli.json;
    match run(cli.command) {
        Ok((value, text)) => {
            if json_mode {
                println!("{}", serde_json::to_string(&value).expect("values serialize"));
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Usage(m) => (2, m),
                Failure::Refused(m) => (1, m),
            };
            if json_mode {
                println!("{}", json!({ "error": msg }));
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
