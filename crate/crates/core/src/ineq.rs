//! Exact checkers for every inequality family: Newton and generalized
//! Newton means, the λ-Newton forms on a wedge, the five product families
//! for self-conjugate lists, the combined parity chain for odd `n`, the
//! critical-λ comparison and the wedge figure data.
//!
//! Verdicts always compare products, never quotients, so vanishing
//! right-hand sides (purely imaginary lists) stay well-defined. Square
//! roots are never materialized: the one family with an irrational
//! constant is decided in squared form.

use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::esf::{EsfSequence, SeqError, WedgeSpec};
use crate::scalar::{binomial, rat_int, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IneqError {
    #[error("indices out of range for family {family}: n={n}, k={k}, l={l}")]
    OutOfRange {
        family: Family,
        n: usize,
        k: usize,
        l: usize,
    },
    #[error("family {0} requires an even-length (pair-decomposable) list")]
    EvenLengthRequired(Family),
    #[error("combined chain requires odd n >= 5, got n = {0}")]
    OddLengthRequired(usize),
    #[error("formal-tau sequence not supported here: {0}")]
    Formal(String),
    #[error("no rational critical lambda for family {0}")]
    UnsupportedCriticalLambda(Family),
    #[error(transparent)]
    Seq(#[from] SeqError),
}

/// Inequality family tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Newton,
    GenNewton,
    LambdaNewton,
    GenLambdaNewton,
    T14I,
    T14II,
    T14III,
    T14IV,
    T14V,
}

impl Family {
    pub const ALL_T14: [Family; 5] = [
        Family::T14I,
        Family::T14II,
        Family::T14III,
        Family::T14IV,
        Family::T14V,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Family::Newton => "newton",
            Family::GenNewton => "gen-newton",
            Family::LambdaNewton => "lambda-newton",
            Family::GenLambdaNewton => "gen-lambda-newton",
            Family::T14I => "t14-i",
            Family::T14II => "t14-ii",
            Family::T14III => "t14-iii",
            Family::T14IV => "t14-iv",
            Family::T14V => "t14-v",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "newton" => Ok(Family::Newton),
            "gen-newton" => Ok(Family::GenNewton),
            "lambda-newton" => Ok(Family::LambdaNewton),
            "gen-lambda-newton" => Ok(Family::GenLambdaNewton),
            "i" | "t14-i" => Ok(Family::T14I),
            "ii" | "t14-ii" => Ok(Family::T14II),
            "iii" | "t14-iii" => Ok(Family::T14III),
            "iv" | "t14-iv" => Ok(Family::T14IV),
            "v" | "t14-v" => Ok(Family::T14V),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

/// One checked inequality instance. `lhs` and `rhs` are the bare products;
/// `margin = lhs − constant·rhs` except for the square-root family, where
/// both the constant and the margin are reported in squared form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IneqReport {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub h: usize,
    pub lhs: Rational,
    pub rhs: Rational,
    pub constant: Rational,
    pub holds: bool,
    pub margin: Rational,
    /// Whether the family's hypothesis was verified for the source list;
    /// `None` when checked directly on a sequence.
    pub hypothesis_met: Option<bool>,
}

fn report(
    family: Family,
    n: usize,
    k: usize,
    l: usize,
    h: usize,
    lhs: Rational,
    rhs: Rational,
    constant: Rational,
    margin: Rational,
) -> IneqReport {
    let holds = !margin.is_negative();
    IneqReport {
        family,
        n,
        k,
        l,
        h,
        lhs,
        rhs,
        constant,
        holds,
        margin,
        hypothesis_met: None,
    }
}

fn product(seq: &EsfSequence, family: Family, indices: &[isize]) -> Result<Rational, IneqError> {
    seq.product(indices).ok_or_else(|| {
        IneqError::Formal(format!(
            "family {family} multiplies an odd number of formal odd-index values"
        ))
    })
}

/// Newton's inequality `E_k² ≥ E_{k−1}E_{k+1}` (guaranteed only for
/// all-real lists; the verdict on other lists may be false).
pub fn check_newton(seq: &EsfSequence, k: usize) -> Result<IneqReport, IneqError> {
    check_gen_lambda(seq, k, k, rat_int(1), Family::Newton)
}

/// Generalized Newton `E_k E_l ≥ E_{k−1} E_{l+1}` for `1 ≤ k ≤ l ≤ n−1`.
pub fn check_gen_newton(seq: &EsfSequence, k: usize, l: usize) -> Result<IneqReport, IneqError> {
    check_gen_lambda(seq, k, l, rat_int(1), Family::GenNewton)
}

/// λ-Newton `E_k² ≥ λ E_{k−1}E_{k+1}`. The caller asserts wedge
/// membership; utilities on [`crate::SelfConjugateList`] record it.
pub fn check_lambda_newton(
    seq: &EsfSequence,
    k: usize,
    w: &WedgeSpec,
) -> Result<IneqReport, IneqError> {
    check_gen_lambda(seq, k, k, w.lambda().clone(), Family::LambdaNewton)
}

/// Generalized λ-Newton `E_k E_l ≥ λ E_{k−1}E_{l+1}`.
pub fn check_gen_lambda_newton(
    seq: &EsfSequence,
    k: usize,
    l: usize,
    w: &WedgeSpec,
) -> Result<IneqReport, IneqError> {
    check_gen_lambda(seq, k, l, w.lambda().clone(), Family::GenLambdaNewton)
}

fn check_gen_lambda(
    seq: &EsfSequence,
    k: usize,
    l: usize,
    lambda: Rational,
    family: Family,
) -> Result<IneqReport, IneqError> {
    let n = seq.n();
    if !(1 <= k && k <= l && l + 1 <= n) {
        return Err(IneqError::OutOfRange { family, n, k, l });
    }
    let lhs = seq.mean_e(k)? * seq.mean_e(l)?;
    let rhs = seq.mean_e(k - 1)? * seq.mean_e(l + 1)?;
    let margin = &lhs - &lambda * &rhs;
    Ok(report(family, n, k, l, 1, lhs, rhs, lambda, margin))
}

/// In-range `(k, l)` pairs for a family at length `n`, in deterministic
/// `(k, l)` order. Empty when the length leaves no valid instance.
pub fn in_range_indices(family: Family, n: usize) -> Vec<(usize, usize)> {
    let top = match family {
        Family::T14I | Family::T14V => (n / 2).saturating_sub(1),
        Family::T14II => n.div_ceil(2).saturating_sub(2),
        Family::T14III => n.saturating_sub(1) / 2,
        Family::T14IV => n.saturating_sub(2) / 2,
        Family::Newton | Family::LambdaNewton | Family::GenNewton | Family::GenLambdaNewton => {
            n.saturating_sub(1)
        }
    };
    let mut out = Vec::new();
    for k in 1..=top {
        for l in k..=top {
            if matches!(family, Family::Newton | Family::LambdaNewton) && l != k {
                continue;
            }
            out.push((k, l));
        }
    }
    out
}

/// Checks one instance of the five product families. For the squared
/// family the verdict compares `(e_{2k}e_{2l})²·k(n−2l)` with
/// `(e_{2k−1}e_{2l+1})²·l(n−2k)`.
pub fn check_t14(
    seq: &EsfSequence,
    family: Family,
    k: usize,
    l: usize,
) -> Result<IneqReport, IneqError> {
    let n = seq.n();
    let oob = || IneqError::OutOfRange { family, n, k, l };
    let (ik, il) = (k as isize, l as isize);
    match family {
        Family::T14I => {
            let m = n / 2;
            if !(1 <= k && k <= l && l + 1 <= m) {
                return Err(oob());
            }
            let lhs = product(seq, family, &[2 * ik, 2 * il])?;
            let rhs = product(seq, family, &[2 * ik - 2, 2 * il + 2])?;
            let constant = Rational::new(((l + 1) * (m - k + 1)).into(), (k * (m - l)).into());
            let margin = &lhs - &constant * &rhs;
            Ok(report(family, n, k, l, 2, lhs, rhs, constant, margin))
        }
        Family::T14II => {
            let m = n.div_ceil(2);
            if !(1 <= k && k <= l && l + 2 <= m) {
                return Err(oob());
            }
            let lhs = product(seq, family, &[2 * ik + 1, 2 * il + 1])?;
            let rhs = product(seq, family, &[2 * ik - 1, 2 * il + 3])?;
            let constant = Rational::new(((l + 1) * (m - k)).into(), (k * (m - l - 1)).into());
            let margin = &lhs - &constant * &rhs;
            Ok(report(family, n, k, l, 2, lhs, rhs, constant, margin))
        }
        Family::T14III => {
            if !(1 <= k && k <= l && 2 * l + 1 <= n) {
                return Err(oob());
            }
            let lhs = product(seq, family, &[2 * ik - 1, 2 * il])?;
            let rhs = product(seq, family, &[2 * ik - 2, 2 * il + 1])?;
            let margin = &lhs - &rhs;
            Ok(report(family, n, k, l, 1, lhs, rhs, rat_int(1), margin))
        }
        Family::T14IV => {
            if !(1 <= k && k <= l && 2 * l + 2 <= n) {
                return Err(oob());
            }
            let lhs = product(seq, family, &[2 * ik, 2 * il + 1])?;
            let rhs = product(seq, family, &[2 * ik - 1, 2 * il + 2])?;
            let margin = &lhs - &rhs;
            Ok(report(family, n, k, l, 1, lhs, rhs, rat_int(1), margin))
        }
        Family::T14V => {
            if n % 2 != 0 {
                return Err(IneqError::EvenLengthRequired(family));
            }
            let m = n / 2;
            if !(1 <= k && k <= l && l + 1 <= m) {
                return Err(oob());
            }
            let lhs = product(seq, family, &[2 * ik, 2 * il])?;
            let rhs = product(seq, family, &[2 * ik - 1, 2 * il + 1])?;
            // Squared form: lhs²·k(n−2l) ≥ rhs²·l(n−2k).
            let wl = rat_int((k * (n - 2 * l)) as i64);
            let wr = rat_int((l * (n - 2 * k)) as i64);
            let margin = &lhs * &lhs * &wl - &rhs * &rhs * &wr;
            let constant = wr / &wl;
            Ok(report(family, n, k, l, 1, lhs, rhs, constant, margin))
        }
        _ => Err(oob()),
    }
}

/// Both links of the combined chain for odd `n`, in squared/product form:
/// `(P_{2k}P_{2k+1})² ≥ P_{2k−2}P_{2k−1}P_{2k+2}P_{2k+3} ≥ (P_{2k−2}P_{2k+3})²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub n: usize,
    pub k: usize,
    pub margin_newton_link: Rational,
    pub margin_parity_link: Rational,
    pub holds: bool,
}

pub fn check_combined_chain(seq: &EsfSequence, k: usize) -> Result<ChainReport, IneqError> {
    let n = seq.n();
    if n % 2 == 0 || n < 5 {
        return Err(IneqError::OddLengthRequired(n));
    }
    if !(1 <= k && 2 * k + 3 <= n) {
        return Err(IneqError::OutOfRange {
            family: Family::T14I,
            n,
            k,
            l: k,
        });
    }
    let p = |j: usize| seq.norm_p_numeric(j).map_err(IneqError::from);
    let (p2km2, p2km1) = (p(2 * k - 2)?, p(2 * k - 1)?);
    let (p2k, p2kp1) = (p(2 * k)?, p(2 * k + 1)?);
    let (p2kp2, p2kp3) = (p(2 * k + 2)?, p(2 * k + 3)?);
    let inner = &p2km2 * &p2km1 * &p2kp2 * &p2kp3;
    let left = &p2k * &p2kp1;
    let outer = &p2km2 * &p2kp3;
    let margin_newton_link = &left * &left - &inner;
    let margin_parity_link = &inner - &outer * &outer;
    let holds = !margin_newton_link.is_negative() && !margin_parity_link.is_negative();
    Ok(ChainReport {
        n,
        k,
        margin_newton_link,
        margin_parity_link,
        holds,
    })
}

/// The critical λ at which the generalized λ-Newton inequality for
/// `(E_a, E_b) vs (E_{a−1}, E_{b+1})` exactly matches the family's e-form
/// bound: `λ* = C · C(n,a−1)C(n,b+1) / (C(n,a)C(n,b))`.
///
/// Supported where that value is rational: the two unit-constant mixed
/// parity families and the squared family at `k = l`.
pub fn critical_lambda(
    n: usize,
    k: usize,
    l: usize,
    family: Family,
) -> Result<Rational, IneqError> {
    let oob = || IneqError::OutOfRange { family, n, k, l };
    let (a, b) = match family {
        Family::T14III => {
            if !(1 <= k && k <= l && 2 * l + 1 <= n) {
                return Err(oob());
            }
            (2 * k - 1, 2 * l)
        }
        Family::T14IV => {
            if !(1 <= k && k <= l && 2 * l + 2 <= n) {
                return Err(oob());
            }
            (2 * k, 2 * l + 1)
        }
        Family::T14V => {
            if k != l {
                return Err(IneqError::UnsupportedCriticalLambda(family));
            }
            if n % 2 != 0 || !(1 <= k && k + 1 <= n / 2) {
                return Err(oob());
            }
            (2 * k, 2 * k)
        }
        other => return Err(IneqError::UnsupportedCriticalLambda(other)),
    };
    let nn = n as u64;
    Ok(binomial(nn, a as i64 - 1) * binomial(nn, b as i64 + 1)
        / (binomial(nn, a as i64) * binomial(nn, b as i64)))
}

/// One sampled boundary point of a wedge, for figure emission.
#[derive(Debug, Clone, PartialEq)]
pub struct WedgeRow {
    pub lambda: Rational,
    pub theta_radians: f64,
    pub x: f64,
    pub y: f64,
}

/// For each λ: the boundary half-angle `θ = arccos √λ` and `samples`
/// points sweeping the arc from `−θ` to `θ` at the given radius.
pub fn wedge_figure_data(
    lambdas: &[Rational],
    radius: f64,
    samples: usize,
) -> Result<Vec<WedgeRow>, IneqError> {
    let mut rows = Vec::new();
    for lambda in lambdas {
        if lambda.is_negative() || lambda > &rat_int(1) {
            return Err(IneqError::Formal(format!(
                "lambda must lie in [0,1], got {lambda}"
            )));
        }
        let lf = lambda.to_f64().expect("rational to f64");
        let theta = lf.sqrt().min(1.0).acos();
        let count = samples.max(1);
        for i in 0..count {
            let phi = if count == 1 {
                0.0
            } else {
                -theta + 2.0 * theta * (i as f64) / ((count - 1) as f64)
            };
            rows.push(WedgeRow {
                lambda: lambda.clone(),
                theta_radians: theta,
                x: radius * phi.cos(),
                y: radius * phi.sin(),
            });
        }
    }
    Ok(rows)
}
