//! Parsing of interpolation-point specs: `int:k`, `rat:a/b`, `alg:<modulus>:<rep>`.

use repst::exact_arith::{parse_rational, RationalPolynomial};
use repst::interp::InterpolationPoint;
use repst::{Error, Result};

/// Ascending comma-separated rational coefficients, e.g. `15,-7,1`.
pub fn parse_coeffs(s: &str) -> Result<RationalPolynomial> {
    let coeffs = s
        .split(',')
        .filter(|c| !c.trim().is_empty())
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalPolynomial::from_coeffs(coeffs))
}

pub fn parse_t_spec(s: &str) -> Result<InterpolationPoint> {
    let (kind, rest) = s.split_once(':').ok_or_else(|| Error::Parse(format!("expected KIND:VALUE, got {s:?}")))?;
    match kind {
        "int" => {
            let k = parse_rational(rest)?;
            if !k.is_integer() {
                return Err(Error::Parse(format!("{rest:?} is not an integer")));
            }
            Ok(InterpolationPoint::rational(k))
        }
        "rat" => Ok(InterpolationPoint::rational(parse_rational(rest)?)),
        "alg" => {
            let (modulus, rep) =
                rest.split_once(':').ok_or_else(|| Error::Parse("expected alg:MODULUS:REP".into()))?;
            InterpolationPoint::algebraic(parse_coeffs(modulus)?, parse_coeffs(rep)?)
        }
        other => Err(Error::Parse(format!("unknown kind {other:?}; use int, rat or alg"))),
    }
}
