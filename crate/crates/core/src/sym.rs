//! Symbolic expansion of `e_k` over a symbolic list and the coefficient
//! checks built on it: positivity of the product-gap polynomials, the
//! subset lower bound Θ for `e_{2k}² − e_{2k−1}e_{2k+1}`, the subset
//! expansion identities, and the closed-form coefficients of the
//! distinguished monomials `T` and `T*`.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::mpoly::{esf_of_polys, MPoly, VarSpace};
use crate::scalar::{binomial_int, rat_int, Rational};

/// Default cap on the symbolic list length `n = 2m + s`; full expansion
/// grows combinatorially past this.
pub const DEFAULT_SYMBOLIC_BOUND: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymError {
    #[error("symbolic size bound exceeded: n = {n} > {max}")]
    BoundExceeded { n: usize, max: usize },
    #[error("index out of range: {0}")]
    IndexRange(String),
    #[error("k and l must have {expected} parity (got k = {k}, l = {l})")]
    Parity {
        expected: &'static str,
        k: usize,
        l: usize,
    },
}

/// Engine carrying the configured symbolic size bound.
#[derive(Debug, Clone, Copy)]
pub struct SymEngine {
    max_n: usize,
}

impl Default for SymEngine {
    fn default() -> Self {
        SymEngine {
            max_n: DEFAULT_SYMBOLIC_BOUND,
        }
    }
}

impl SymEngine {
    pub fn with_bound(max_n: usize) -> Self {
        SymEngine { max_n }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    fn check_bound(&self, n: usize) -> Result<(), SymError> {
        if n > self.max_n {
            Err(SymError::BoundExceeded { n, max: self.max_n })
        } else {
            Ok(())
        }
    }

    /// Exact symbolic `e_0..e_n` in the variables `a_1..a_m, b_1..b_m,
    /// μ_1..μ_s`, folded with the three-term pair step and the two-term
    /// real step.
    pub fn symbolic_esf(&self, m: usize, s: usize) -> Result<Vec<MPoly>, SymError> {
        let n = 2 * m + s;
        if n == 0 {
            return Err(SymError::IndexRange("m + s must be at least 1".into()));
        }
        self.check_bound(n)?;
        Ok(symbolic_esf_unchecked(m, s))
    }

    /// Difference polynomial `e_k e_l − e_{k−shift} e_{l+shift}` over the
    /// symbolic list. `shift = 1` requires `1 ≤ k < l ≤ n−1` with mixed
    /// parity; `shift = 2` requires `2 ≤ k ≤ l ≤ n−2` with equal parity.
    pub fn gap_poly(
        &self,
        m: usize,
        s: usize,
        k: usize,
        l: usize,
        shift: usize,
    ) -> Result<MPoly, SymError> {
        let n = 2 * m + s;
        match shift {
            1 => {
                if k % 2 == l % 2 {
                    return Err(SymError::Parity {
                        expected: "different",
                        k,
                        l,
                    });
                }
                if !(1 <= k && k < l && l <= n.saturating_sub(1)) {
                    return Err(SymError::IndexRange(format!(
                        "shift 1 needs 1 <= k < l <= n-1, got k={k} l={l} n={n}"
                    )));
                }
            }
            2 => {
                if k % 2 != l % 2 {
                    return Err(SymError::Parity {
                        expected: "equal",
                        k,
                        l,
                    });
                }
                if !(2 <= k && k <= l && l <= n.saturating_sub(2)) {
                    return Err(SymError::IndexRange(format!(
                        "shift 2 needs 2 <= k <= l <= n-2, got k={k} l={l} n={n}"
                    )));
                }
            }
            other => {
                return Err(SymError::IndexRange(format!(
                    "shift must be 1 or 2, got {other}"
                )))
            }
        }
        let es = self.symbolic_esf(m, s)?;
        let get = |i: isize| -> MPoly {
            if i >= 0 && (i as usize) < es.len() {
                es[i as usize].clone()
            } else {
                MPoly::zero(2 * m + s)
            }
        };
        let (k, l, h) = (k as isize, l as isize, shift as isize);
        Ok(get(k).mul(&get(l)).sub(&get(k - h).mul(&get(l + h))))
    }

    /// The subset lower bound
    /// `Θ = Σ_r 4^r Σ_{|S|=r} (∏_{i∈S} a_i²b_i²) · e_{k−r}(V_{U∖S})²`
    /// with `V_S = (a_i² − b_i² : i ∈ S)`, for a pair-only list.
    pub fn theta_lower_bound(&self, m: usize, k: usize) -> Result<MPoly, SymError> {
        if !(1 <= k && k + 1 <= m) {
            return Err(SymError::IndexRange(format!(
                "theta needs 1 <= k <= m-1, got k={k} m={m}"
            )));
        }
        self.check_bound(2 * m)?;
        Ok(theta_unchecked(m, k))
    }

    /// The gap polynomial `e_{2k}² − e_{2k−1}e_{2k+1} − Θ`.
    pub fn theta_gap_poly(&self, m: usize, k: usize) -> Result<MPoly, SymError> {
        if !(1 <= k && k + 1 <= m) {
            return Err(SymError::IndexRange(format!(
                "theta gap needs 1 <= k <= m-1, got k={k} m={m}"
            )));
        }
        self.check_bound(2 * m)?;
        let es = symbolic_esf_unchecked(m, 0);
        let gap = es[2 * k]
            .square()
            .sub(&es[2 * k - 1].mul(&es[2 * k + 1]))
            .sub(&theta_unchecked(m, k));
        Ok(gap)
    }

    /// Scans the gap polynomial: every coefficient must be nonnegative,
    /// and the only monomials allowed to vanish are the `T*`-shaped ones,
    /// which exist only when `m = 2k`. Returns the classified inventory.
    pub fn theta_gap_check(&self, m: usize, k: usize) -> Result<ThetaGapReport, SymError> {
        let gap = self.theta_gap_poly(m, k)?;
        let negatives: Vec<(Vec<u32>, Rational)> = gap
            .sorted_terms()
            .into_iter()
            .filter(|(_, c)| c.is_negative())
            .collect();
        let mut tstar = Vec::new();
        let mut tstar_orbit_uniform = true;
        if m == 2 * k {
            for p in 0..=2 * k {
                // Canonical labelling: a_1..a_p squared, b_{p+1}..b_{2k} squared.
                let canonical = tstar_exponents(m, p, &(0..m).collect::<Vec<_>>());
                let coeff = gap.coeff(&canonical);
                for positions in (0..m).combinations(p) {
                    let mut chosen = positions.clone();
                    chosen.extend((0..m).filter(|i| !positions.contains(i)));
                    let exps = tstar_exponents(m, p, &chosen);
                    if gap.coeff(&exps) != coeff {
                        tstar_orbit_uniform = false;
                    }
                }
                tstar.push((p, coeff));
            }
        }
        let pass = negatives.is_empty() && tstar_orbit_uniform;
        Ok(ThetaGapReport {
            m,
            k,
            term_count: gap.num_terms(),
            negatives,
            tstar_coeffs: tstar,
            tstar_orbit_uniform,
            pass,
        })
    }

    /// Verifies the two subset expansion identities of `e_{2k}` and
    /// `e_{2k−1}` over `W_S = (a_i² + b_i² : i ∈ S)` by symbolic
    /// subtraction: both differences must be the zero polynomial.
    pub fn subset_expansion_check(
        &self,
        m: usize,
        k: usize,
    ) -> Result<SubsetExpansionReport, SymError> {
        if m == 0 || k > m {
            return Err(SymError::IndexRange(format!(
                "subset expansion needs m >= 1 and 0 <= k <= m, got m={m} k={k}"
            )));
        }
        self.check_bound(2 * m)?;
        let vars = VarSpace::new(m, 0);
        let arity = vars.arity();
        let es = symbolic_esf_unchecked(m, 0);

        let w_entry = |i: usize| -> MPoly {
            let a = MPoly::var(arity, vars.a(i + 1));
            let b = MPoly::var(arity, vars.b(i + 1));
            a.square().add(&b.square())
        };

        // Even identity: e_{2k} = Σ_{r=0}^{k} 4^r Σ_{|S|=2r} (∏_S a_i) e_{k-r}(W_{U\S}).
        let mut even_rhs = MPoly::zero(arity);
        for r in 0..=k {
            let weight = Rational::from_integer(BigInt::one() << (2 * r));
            for subset in (0..m).combinations(2 * r) {
                let mut prod = MPoly::one(arity);
                for &i in &subset {
                    prod = prod.mul(&MPoly::var(arity, vars.a(i + 1)));
                }
                let rest: Vec<MPoly> = (0..m)
                    .filter(|i| !subset.contains(i))
                    .map(w_entry)
                    .collect();
                let esw = esf_of_polys(arity, &rest, k - r);
                even_rhs.add_assign(&prod.mul(&esw[k - r]).scale(&weight));
            }
        }
        let even_ok = es[2 * k].sub(&even_rhs).is_zero();

        // Odd identity: e_{2k-1} = Σ_{r=0}^{k-1} 2·4^r Σ_{|S|=2r+1} (∏_S a_i) e_{k-r-1}(W_{U\S}).
        let odd_ok = if k >= 1 {
            let mut odd_rhs = MPoly::zero(arity);
            for r in 0..k {
                let weight = Rational::from_integer(BigInt::from(2) << (2 * r));
                for subset in (0..m).combinations(2 * r + 1) {
                    let mut prod = MPoly::one(arity);
                    for &i in &subset {
                        prod = prod.mul(&MPoly::var(arity, vars.a(i + 1)));
                    }
                    let rest: Vec<MPoly> = (0..m)
                        .filter(|i| !subset.contains(i))
                        .map(w_entry)
                        .collect();
                    let esw = esf_of_polys(arity, &rest, k - r - 1);
                    odd_rhs.add_assign(&prod.mul(&esw[k - r - 1]).scale(&weight));
                }
            }
            Some(es[2 * k - 1].sub(&odd_rhs).is_zero())
        } else {
            None
        };

        Ok(SubsetExpansionReport {
            m,
            k,
            even_ok,
            odd_ok,
        })
    }

    /// Extracts the coefficients of `T = ∏_{i=1}^k a_i²b_i²` from the
    /// symbolically expanded pieces, for cross-checking the closed forms.
    /// Needs `k ≤ m`.
    pub fn t_coeffs_symbolic(&self, m: usize, k: usize) -> Result<TCoeffs, SymError> {
        if !(1 <= k && k <= m) {
            return Err(SymError::IndexRange(format!(
                "T extraction needs 1 <= k <= m, got k={k} m={m}"
            )));
        }
        self.check_bound(2 * m)?;
        let vars = VarSpace::new(m, 0);
        let mut target = vec![0u32; vars.arity()];
        for i in 1..=k {
            target[vars.a(i)] = 2;
            target[vars.b(i)] = 2;
        }
        let es = symbolic_esf_unchecked(m, 0);
        let get = |i: usize| -> MPoly {
            es.get(i)
                .cloned()
                .unwrap_or_else(|| MPoly::zero(vars.arity()))
        };
        let in_e2k_sq = get(2 * k).coeff_in_product(&get(2 * k), &target);
        let in_cross = get(2 * k - 1).coeff_in_product(&get(2 * k + 1), &target);
        let in_theta = theta_unchecked(m, k).coeff(&target);
        let in_gap = in_e2k_sq.clone() - &in_cross - &in_theta;
        Ok(TCoeffs {
            in_gap,
            in_theta,
            in_e2k_sq,
            in_cross,
        })
    }

    /// Extracts the coefficient of
    /// `T* = (∏_{i=1}^p a_i²)(∏_{i=p+1}^{2k} b_i²)` from the expanded gap
    /// pieces at `m = 2k`.
    pub fn t_star_coeff_symbolic(&self, k: usize, p: usize) -> Result<Rational, SymError> {
        if k == 0 || p > 2 * k {
            return Err(SymError::IndexRange(format!(
                "T* extraction needs k >= 1 and 0 <= p <= 2k, got k={k} p={p}"
            )));
        }
        let m = 2 * k;
        self.check_bound(2 * m)?;
        let vars = VarSpace::new(m, 0);
        let target = tstar_exponents(m, p, &(0..m).collect::<Vec<_>>());
        let es = symbolic_esf_unchecked(m, 0);
        let in_e2k_sq = es[2 * k].coeff_in_product(&es[2 * k], &target);
        let in_cross = es[2 * k - 1].coeff_in_product(&es[2 * k + 1], &target);
        let in_theta = theta_unchecked(m, k).coeff(&target);
        debug_assert_eq!(vars.arity(), target.len());
        Ok(in_e2k_sq - in_cross - in_theta)
    }
}

/// Exponent vector for a `T*`-orbit monomial: `a` squared at the first `p`
/// chosen positions, `b` squared at the remaining ones.
fn tstar_exponents(m: usize, p: usize, positions: &[usize]) -> Vec<u32> {
    let vars = VarSpace::new(m, 0);
    let mut exps = vec![0u32; vars.arity()];
    for (idx, &pos) in positions.iter().enumerate() {
        if idx < p {
            exps[vars.a(pos + 1)] = 2;
        } else {
            exps[vars.b(pos + 1)] = 2;
        }
    }
    exps
}

fn symbolic_esf_unchecked(m: usize, s: usize) -> Vec<MPoly> {
    let vars = VarSpace::new(m, s);
    let arity = vars.arity();
    let mut e = vec![MPoly::one(arity)];
    for i in 1..=m {
        let a = MPoly::var(arity, vars.a(i));
        let b = MPoly::var(arity, vars.b(i));
        let lin = a.scale(&rat_int(2));
        let quad = a.square().add(&b.square());
        e.push(MPoly::zero(arity));
        e.push(MPoly::zero(arity));
        for j in (0..e.len() - 2).rev() {
            let v = e[j].clone();
            let t2 = v.mul(&quad);
            e[j + 2].add_assign(&t2);
            let t1 = v.mul(&lin);
            e[j + 1].add_assign(&t1);
        }
    }
    for j in 1..=s {
        let mu = MPoly::var(arity, vars.mu(j));
        e.push(MPoly::zero(arity));
        for i in (0..e.len() - 1).rev() {
            let v = e[i].mul(&mu);
            e[i + 1].add_assign(&v);
        }
    }
    e
}

fn theta_unchecked(m: usize, k: usize) -> MPoly {
    let vars = VarSpace::new(m, 0);
    let arity = vars.arity();
    let mut theta = MPoly::zero(arity);
    for r in 0..k {
        let weight = Rational::from_integer(BigInt::one() << (2 * r));
        for subset in (0..m).combinations(r) {
            let mut prod = MPoly::one(arity);
            for &i in &subset {
                let a = MPoly::var(arity, vars.a(i + 1));
                let b = MPoly::var(arity, vars.b(i + 1));
                prod = prod.mul(&a.square()).mul(&b.square());
            }
            let v_entries: Vec<MPoly> = (0..m)
                .filter(|i| !subset.contains(i))
                .map(|i| {
                    let a = MPoly::var(arity, vars.a(i + 1));
                    let b = MPoly::var(arity, vars.b(i + 1));
                    a.square().sub(&b.square())
                })
                .collect();
            let esv = esf_of_polys(arity, &v_entries, k - r);
            theta.add_assign(&prod.mul(&esv[k - r].square()).scale(&weight));
        }
    }
    theta
}

/// Positivity scan verdict with the offending terms.
#[derive(Debug, Clone)]
pub struct PositivityReport {
    pub strict: bool,
    pub pass: bool,
    pub zero_polynomial: bool,
    pub term_count: usize,
    pub offenders: Vec<(Vec<u32>, Rational)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositivityMode {
    Strict,
    Nonneg,
}

/// Scans all stored coefficients. Strict mode demands every coefficient
/// positive and fails on the zero polynomial; nonneg mode only rejects
/// negative coefficients.
pub fn positivity_check(p: &MPoly, mode: PositivityMode) -> PositivityReport {
    let strict = mode == PositivityMode::Strict;
    let offenders: Vec<(Vec<u32>, Rational)> = p
        .sorted_terms()
        .into_iter()
        .filter(|(_, c)| c.is_negative() || (strict && c.is_zero()))
        .collect();
    let zero_polynomial = p.is_zero();
    PositivityReport {
        strict,
        pass: offenders.is_empty() && !(strict && zero_polynomial),
        zero_polynomial,
        term_count: p.num_terms(),
        offenders,
    }
}

#[derive(Debug, Clone)]
pub struct ThetaGapReport {
    pub m: usize,
    pub k: usize,
    pub term_count: usize,
    pub negatives: Vec<(Vec<u32>, Rational)>,
    /// For `m = 2k`: the coefficient of the canonical `T*` monomial per
    /// `p`, with absence stored as zero.
    pub tstar_coeffs: Vec<(usize, Rational)>,
    pub tstar_orbit_uniform: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetExpansionReport {
    pub m: usize,
    pub k: usize,
    pub even_ok: bool,
    /// `None` when `k = 0` (the odd identity starts at `k = 1`).
    pub odd_ok: Option<bool>,
}

impl SubsetExpansionReport {
    pub fn pass(&self) -> bool {
        self.even_ok && self.odd_ok.unwrap_or(true)
    }
}

/// Coefficients of `T = ∏_{i≤k} a_i²b_i²` in the gap pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TCoeffs {
    pub in_gap: Rational,
    pub in_theta: Rational,
    pub in_e2k_sq: Rational,
    pub in_cross: Rational,
}

/// Closed forms for the coefficient of `T` in the gap polynomial, in Θ and
/// in `e_{2k}²`: `(2^{2k}, 2^k(1 − 2^k), 2^k)`.
pub fn t_coeff_closed_forms(k: usize) -> (Rational, Rational, Rational) {
    let two_k = BigInt::one() << k;
    let in_gap = Rational::from_integer(BigInt::one() << (2 * k));
    let in_theta = Rational::from_integer(&two_k * (BigInt::one() - &two_k));
    let in_e2k_sq = Rational::from_integer(two_k);
    (in_gap, in_theta, in_e2k_sq)
}

/// Closed-form coefficient of `T*` in the gap polynomial:
/// `Σ_r 16^r C(p,2r) C(2(k−r),k−r) − 4 Σ_r 16^r C(p,2r+1) C(2(k−r)−1,k−r)
///  − (−1)^p C(2k,k)`, guaranteed nonnegative, vanishing at `p ∈ {0,1}`.
pub fn t_star_coeff(k: usize, p: usize) -> Result<Rational, SymError> {
    if k == 0 || p > 2 * k {
        return Err(SymError::IndexRange(format!(
            "T* coefficient needs k >= 1 and 0 <= p <= 2k, got k={k} p={p}"
        )));
    }
    let mut acc = BigInt::zero();
    let mut r = 0usize;
    while 2 * r <= p {
        acc += (BigInt::one() << (4 * r))
            * binomial_int(p as u64, (2 * r) as i64)
            * binomial_int((2 * (k - r)) as u64, (k - r) as i64);
        r += 1;
    }
    let mut r = 0usize;
    while 2 * r + 1 <= p {
        acc -= BigInt::from(4)
            * (BigInt::one() << (4 * r))
            * binomial_int(p as u64, (2 * r + 1) as i64)
            * binomial_int((2 * (k - r) - 1) as u64, (k - r) as i64);
        r += 1;
    }
    let central = binomial_int((2 * k) as u64, k as i64);
    if p % 2 == 0 {
        acc -= central;
    } else {
        acc += central;
    }
    Ok(Rational::from_integer(acc))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomSumFailure {
    pub q: usize,
    pub identity: &'static str,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// Verifies the four explicitly summable binomial sums
/// `Σ 4^r C(2q+1, 2r) = (3^{2q+1} − 1)/2`,
/// `Σ 4^r C(2q+1, 2r+1) = (3^{2q+1} + 1)/4`,
/// `Σ 4^r C(2q, 2r) = (3^{2q} + 1)/2` and
/// `Σ 4^r C(2q, 2r+1) = (3^{2q} − 1)/4` for every `q ≤ q_max`.
pub fn binom_sum_identities(q_max: usize) -> Result<(), BinomSumFailure> {
    for q in 0..=q_max {
        let pow3_odd = BigInt::from(3).pow(2 * q as u32 + 1);
        let pow3_even = BigInt::from(3).pow(2 * q as u32);
        let sum = |top: u64, odd_slots: bool| -> BigInt {
            let mut acc = BigInt::zero();
            let mut r = 0u64;
            loop {
                let idx = if odd_slots { 2 * r + 1 } else { 2 * r };
                if idx > top {
                    break;
                }
                acc += (BigInt::one() << (2 * r)) * binomial_int(top, idx as i64);
                r += 1;
            }
            acc
        };
        let one = BigInt::one();
        let checks: [(&'static str, BigInt, BigInt); 4] = [
            (
                "sum 4^r C(2q+1, 2r)",
                sum(2 * q as u64 + 1, false),
                (&pow3_odd - &one) / BigInt::from(2),
            ),
            (
                "sum 4^r C(2q+1, 2r+1)",
                sum(2 * q as u64 + 1, true),
                (&pow3_odd + &one) / BigInt::from(4),
            ),
            (
                "sum 4^r C(2q, 2r)",
                sum(2 * q as u64, false),
                (&pow3_even + &one) / BigInt::from(2),
            ),
            (
                "sum 4^r C(2q, 2r+1)",
                sum(2 * q as u64, true),
                (&pow3_even - &one) / BigInt::from(4),
            ),
        ];
        for (identity, lhs, rhs) in checks {
            if lhs != rhs {
                return Err(BinomSumFailure {
                    q,
                    identity,
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(())
}

/// The weight `ω(r) = 4^r C(2(k−r), k−r) / C(2k, k)`.
pub fn omega(k: usize, r: usize) -> Rational {
    assert!(r <= k);
    Rational::new(
        (BigInt::one() << (2 * r)) * binomial_int((2 * (k - r)) as u64, (k - r) as i64),
        binomial_int((2 * k) as u64, k as i64),
    )
}

/// Verifies `ω(r+1)/ω(r) = 1 + 1/(2(k−r)−1) > 1` exactly for
/// `r = 0..q−1`; requires `1 ≤ q ≤ k−1`.
pub fn omega_ratio_check(k: usize, q: usize) -> Result<(), SymError> {
    if !(1 <= q && q + 1 <= k) {
        return Err(SymError::IndexRange(format!(
            "omega ratio needs 1 <= q <= k-1, got q={q} k={k}"
        )));
    }
    for r in 0..q {
        let ratio = omega(k, r + 1) / omega(k, r);
        let expected =
            rat_int(1) + Rational::new(BigInt::one(), BigInt::from(2 * (k - r) as i64 - 1));
        if ratio != expected || ratio <= rat_int(1) {
            return Err(SymError::IndexRange(format!(
                "omega ratio mismatch at k={k} r={r}: {ratio} vs {expected}"
            )));
        }
    }
    Ok(())
}
