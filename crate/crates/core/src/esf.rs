//! The list data model and exact computation of `e_k`, `E_k` and `P_k`.
//!
//! A [`SelfConjugateList`] holds conjugate pairs `a ± ib` and real entries
//! `μ`, all with nonnegative real parts, so every elementary symmetric
//! function is a nonnegative rational. An optional formal scale `tau`
//! attaches one extra real pair `(t, t)` with `t² = tau` without ever
//! materializing the (possibly irrational) `t`: odd-index `e`'s are then
//! stored as the exact cofactor of `t`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{binomial, parse_rational, rat_int, rational_to_string, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ListError {
    #[error("pair real part must be nonnegative, got {0}")]
    NegativePairRealPart(String),
    #[error("real entry must be nonnegative, got {0}")]
    NegativeReal(String),
    #[error("formal tau must be nonnegative, got {0}")]
    NegativeTau(String),
    #[error("formal tau requires a base list with purely imaginary pairs and zero reals")]
    TauBaseNotImaginary,
    #[error("lambda must lie in [0, 1], got {0}")]
    LambdaOutOfRange(String),
    #[error("invalid list document: {0}")]
    Document(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeqError {
    #[error("index {k} out of range for length-{n} sequence")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("operation needs a lone odd-index value of a formal-tau sequence")]
    FormalMode,
}

/// Closed wedge `|arg z| ≤ arccos √λ` about the positive real axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeSpec {
    lambda: Rational,
}

impl WedgeSpec {
    pub fn new(lambda: Rational) -> Result<Self, ListError> {
        if lambda.is_negative() || lambda > rat_int(1) {
            return Err(ListError::LambdaOutOfRange(lambda.to_string()));
        }
        Ok(WedgeSpec { lambda })
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }
}

/// Multiset of conjugate pairs `a_i ± i b_i` plus real entries `μ_j`, all
/// with nonnegative real parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfConjugateList {
    pairs: Vec<(Rational, Rational)>,
    reals: Vec<Rational>,
    tau: Option<Rational>,
}

impl SelfConjugateList {
    /// Builds a list from pairs `(a, b)` and reals `μ`. Negative `a` or `μ`
    /// are rejected; `b` is canonicalized to its absolute value since
    /// `(a, b)` and `(a, -b)` encode the same pair.
    pub fn new(pairs: Vec<(Rational, Rational)>, reals: Vec<Rational>) -> Result<Self, ListError> {
        Self::build(pairs, reals, None)
    }

    /// Builds a list carrying one extra formal real pair `(t, t)` with
    /// `t² = tau`. The rational part of the list must have all odd-index
    /// `e`'s equal to zero (purely imaginary pairs, zero reals) so that the
    /// odd-index `e`'s of the full list are exact multiples of `t`.
    pub fn with_formal_tau(
        pairs: Vec<(Rational, Rational)>,
        reals: Vec<Rational>,
        tau: Rational,
    ) -> Result<Self, ListError> {
        Self::build(pairs, reals, Some(tau))
    }

    fn build(
        pairs: Vec<(Rational, Rational)>,
        reals: Vec<Rational>,
        tau: Option<Rational>,
    ) -> Result<Self, ListError> {
        for (a, _) in &pairs {
            if a.is_negative() {
                return Err(ListError::NegativePairRealPart(a.to_string()));
            }
        }
        for mu in &reals {
            if mu.is_negative() {
                return Err(ListError::NegativeReal(mu.to_string()));
            }
        }
        if let Some(t) = &tau {
            if t.is_negative() {
                return Err(ListError::NegativeTau(t.to_string()));
            }
            let base_imaginary =
                pairs.iter().all(|(a, _)| a.is_zero()) && reals.iter().all(|mu| mu.is_zero());
            if !base_imaginary {
                return Err(ListError::TauBaseNotImaginary);
            }
        }
        let pairs = pairs.into_iter().map(|(a, b)| (a, b.abs())).collect();
        Ok(SelfConjugateList { pairs, reals, tau })
    }

    /// Total length `n`, counting each pair twice and the formal pair (when
    /// present) as two real entries.
    pub fn n(&self) -> usize {
        2 * self.pairs.len() + self.reals.len() + if self.tau.is_some() { 2 } else { 0 }
    }

    pub fn pairs(&self) -> &[(Rational, Rational)] {
        &self.pairs
    }

    pub fn reals(&self) -> &[Rational] {
        &self.reals
    }

    pub fn tau(&self) -> Option<&Rational> {
        self.tau.as_ref()
    }

    /// True when the multiset contains no unpaired real entry, i.e. every
    /// real number in it appears with even multiplicity by construction.
    pub fn is_pair_only(&self) -> bool {
        self.reals.is_empty()
    }

    /// True when every real entry occurs an even number of times, which is
    /// the hypothesis of the pair-product inequality family even if the
    /// entries were not keyed in as pairs.
    pub fn reals_have_even_multiplicity(&self) -> bool {
        let mut sorted = self.reals.clone();
        sorted.sort();
        let mut i = 0;
        while i < sorted.len() {
            let mut j = i;
            while j < sorted.len() && sorted[j] == sorted[i] {
                j += 1;
            }
            if (j - i) % 2 == 1 {
                return false;
            }
            i = j;
        }
        true
    }

    /// Membership in the closed wedge: every entry `z` must satisfy
    /// `cos²(arg z) ≥ λ`, tested exactly as `a² ≥ λ(a² + b²)`. Nonnegative
    /// reals (including 0) always lie inside.
    pub fn wedge_member(&self, w: &WedgeSpec) -> bool {
        self.pairs.iter().all(|(a, b)| {
            let a2 = a * a;
            a2.clone() >= w.lambda() * (a2 + b * b)
        })
    }

    /// Scales every entry by `c > 0`; `e_k` scales by `c^k`.
    pub fn scale(&self, c: &Rational) -> SelfConjugateList {
        SelfConjugateList {
            pairs: self.pairs.iter().map(|(a, b)| (a * c, b * c)).collect(),
            reals: self.reals.iter().map(|mu| mu * c).collect(),
            tau: self.tau.as_ref().map(|t| t * c * c),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ListDoc::from(self)).expect("list serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, ListError> {
        let doc: ListDoc =
            serde_json::from_str(s).map_err(|e| ListError::Document(e.to_string()))?;
        doc.try_into()
    }
}

/// Wire format: `{"pairs": [["a","b"], ...], "reals": ["mu", ...],
/// "tau": "p/q"}`, all scalars as canonical rational strings.
#[derive(Serialize, Deserialize)]
struct ListDoc {
    pairs: Vec<(String, String)>,
    reals: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    tau: Option<String>,
}

impl From<&SelfConjugateList> for ListDoc {
    fn from(x: &SelfConjugateList) -> Self {
        ListDoc {
            pairs: x
                .pairs
                .iter()
                .map(|(a, b)| (rational_to_string(a), rational_to_string(b)))
                .collect(),
            reals: x.reals.iter().map(rational_to_string).collect(),
            tau: x.tau.as_ref().map(rational_to_string),
        }
    }
}

impl TryFrom<ListDoc> for SelfConjugateList {
    type Error = ListError;

    fn try_from(doc: ListDoc) -> Result<Self, ListError> {
        let parse = |s: &str| parse_rational(s).map_err(|e| ListError::Document(e.to_string()));
        let mut pairs = Vec::with_capacity(doc.pairs.len());
        for (a, b) in &doc.pairs {
            pairs.push((parse(a)?, parse(b)?));
        }
        let mut reals = Vec::with_capacity(doc.reals.len());
        for mu in &doc.reals {
            reals.push(parse(mu)?);
        }
        match doc.tau {
            Some(t) => SelfConjugateList::with_formal_tau(pairs, reals, parse(&t)?),
            None => SelfConjugateList::new(pairs, reals),
        }
    }
}

/// Normalized view of a `P_k` value: exact, or an exact cofactor of the
/// formal scale `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PNorm {
    Exact(Rational),
    /// The value is `c · t` where `t² = tau`; `c` is returned.
    FormalOddScale(Rational),
}

/// Exact values `e_0..e_n` of a list, with `E_k` and `P_k` views.
///
/// In formal-tau mode the odd-index slots store the cofactor `c` of the
/// true value `c·t`; any product containing an even number of odd-index
/// factors is still an exact rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EsfSequence {
    e: Vec<Rational>,
    formal_tau: Option<Rational>,
}

impl EsfSequence {
    /// Wraps raw nonnegative values `e_0..e_n` (with `e_0 = 1`) as a
    /// sequence, e.g. for the half-degree lists read off a `w`-polynomial.
    pub fn from_values(e: Vec<Rational>) -> Self {
        assert!(!e.is_empty() && e[0] == rat_int(1), "e_0 must be 1");
        EsfSequence {
            e,
            formal_tau: None,
        }
    }

    pub fn n(&self) -> usize {
        self.e.len() - 1
    }

    pub fn is_formal(&self) -> bool {
        self.formal_tau.is_some()
    }

    pub fn formal_tau(&self) -> Option<&Rational> {
        self.formal_tau.as_ref()
    }

    /// Raw stored slots; odd slots are cofactors of `t` in formal mode.
    pub fn raw(&self) -> &[Rational] {
        &self.e
    }

    /// Exact numeric `e_k`, with the convention `e_k = 0` outside `0..=n`.
    /// `None` when the value is a nonzero multiple of the formal `t`.
    pub fn e_numeric(&self, k: isize) -> Option<Rational> {
        if k < 0 || k as usize > self.n() {
            return Some(Rational::zero());
        }
        let v = &self.e[k as usize];
        if self.formal_tau.is_some() && k % 2 == 1 && !v.is_zero() {
            None
        } else {
            Some(v.clone())
        }
    }

    /// Exact product `∏ e_{k_i}`, using the out-of-range-is-zero
    /// convention. In formal mode the product is exact iff it contains an
    /// even number of odd-index factors (each pair of `t`'s contributes
    /// `tau`); otherwise `None`.
    pub fn product(&self, indices: &[isize]) -> Option<Rational> {
        let mut acc = rat_int(1);
        let mut odd_factors = 0usize;
        for &k in indices {
            if k < 0 || k as usize > self.n() {
                return Some(Rational::zero());
            }
            if self.formal_tau.is_some() && k % 2 == 1 {
                odd_factors += 1;
            }
            acc *= &self.e[k as usize];
        }
        if odd_factors % 2 == 1 {
            if acc.is_zero() {
                return Some(acc);
            }
            return None;
        }
        if let Some(tau) = &self.formal_tau {
            for _ in 0..odd_factors / 2 {
                acc *= tau;
            }
        }
        Some(acc)
    }

    /// Elementary symmetric mean `E_k = e_k / C(n, k)`.
    pub fn mean_e(&self, k: usize) -> Result<Rational, SeqError> {
        if self.formal_tau.is_some() {
            return Err(SeqError::FormalMode);
        }
        if k > self.n() {
            return Err(SeqError::IndexOutOfRange { k, n: self.n() });
        }
        Ok(&self.e[k] / binomial(self.n() as u64, k as i64))
    }

    /// Parity-aware normalization: `P_{2j} = e_{2j}/C(⌊n/2⌋, j)` and
    /// `P_{2j+1} = e_{2j+1}/C(⌈n/2⌉−1, j)`. Indices beyond `n` are
    /// rejected rather than extended by zero.
    pub fn norm_p(&self, k: usize) -> Result<PNorm, SeqError> {
        let n = self.n();
        if k > n {
            return Err(SeqError::IndexOutOfRange { k, n });
        }
        let value = if k % 2 == 0 {
            &self.e[k] / binomial((n / 2) as u64, (k / 2) as i64)
        } else {
            &self.e[k] / binomial((n.div_ceil(2) - 1) as u64, (k / 2) as i64)
        };
        if self.formal_tau.is_some() && k % 2 == 1 {
            Ok(PNorm::FormalOddScale(value))
        } else {
            Ok(PNorm::Exact(value))
        }
    }

    /// `P_k` as an exact rational, failing in formal mode at odd indices.
    pub fn norm_p_numeric(&self, k: usize) -> Result<Rational, SeqError> {
        match self.norm_p(k)? {
            PNorm::Exact(v) => Ok(v),
            PNorm::FormalOddScale(c) if c.is_zero() => Ok(c),
            PNorm::FormalOddScale(_) => Err(SeqError::FormalMode),
        }
    }
}

fn fold_pair(e: &mut Vec<Rational>, a: &Rational, b: &Rational) {
    let lin = rat_int(2) * a;
    let quad = a * a + b * b;
    let n0 = e.len();
    e.push(Rational::zero());
    e.push(Rational::zero());
    for i in (0..n0).rev() {
        let v = e[i].clone();
        e[i + 2] += &quad * &v;
        e[i + 1] += &lin * &v;
    }
}

fn fold_real(e: &mut Vec<Rational>, mu: &Rational) {
    let n0 = e.len();
    e.push(Rational::zero());
    for i in (0..n0).rev() {
        let v = e[i].clone();
        e[i + 1] += mu * &v;
    }
}

/// Exact `e_0..e_n` of a list via the incremental recurrences: pairs fold
/// with the three-term step, reals with the two-term step. The result is
/// independent of fold order.
pub fn elem_sym_all(x: &SelfConjugateList) -> EsfSequence {
    let mut e = vec![rat_int(1)];
    for (a, b) in x.pairs() {
        fold_pair(&mut e, a, b);
    }
    for mu in x.reals() {
        fold_real(&mut e, mu);
    }
    let formal_tau = x.tau().cloned();
    if let Some(tau) = &formal_tau {
        // Append the formal pair (t, t): with base odd entries all zero,
        // even slots get e_{2i} + tau·e_{2i-2} and odd slots hold the
        // cofactor 2·e_{2i} of t.
        let base = e;
        let mut out = Vec::with_capacity(base.len() + 2);
        for j in 0..base.len() + 2 {
            let from_base = |i: isize| -> Rational {
                if i >= 0 && (i as usize) < base.len() {
                    base[i as usize].clone()
                } else {
                    Rational::zero()
                }
            };
            let j = j as isize;
            if j % 2 == 0 {
                out.push(from_base(j) + tau * from_base(j - 2));
            } else {
                out.push(rat_int(2) * from_base(j - 1));
            }
        }
        e = out;
    }
    for v in &e {
        assert!(
            !v.is_negative(),
            "nonnegative real parts must give nonnegative e_k, got {v}"
        );
    }
    EsfSequence { e, formal_tau }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn seq_of(pairs: Vec<(i64, i64)>, reals: Vec<i64>) -> EsfSequence {
        let list = SelfConjugateList::new(
            pairs
                .into_iter()
                .map(|(a, b)| (rat_int(a), rat_int(b)))
                .collect(),
            reals.into_iter().map(rat_int).collect(),
        )
        .unwrap();
        elem_sym_all(&list)
    }

    #[test]
    fn three_real_ones_give_binomials() {
        let seq = seq_of(vec![], vec![1, 1, 1]);
        assert_eq!(seq.raw(), &[rat_int(1), rat_int(3), rat_int(3), rat_int(1)]);
    }

    #[test]
    fn two_imaginary_pairs_give_binomial_values() {
        let seq = seq_of(vec![(0, 1), (0, 1)], vec![]);
        assert_eq!(
            seq.raw(),
            &[rat_int(1), rat_int(0), rat_int(2), rat_int(0), rat_int(1)]
        );
    }

    #[test]
    fn half_imaginary_pair_plus_real_one() {
        let list = SelfConjugateList::new(vec![(rat_int(0), rat(1, 2))], vec![rat_int(1)]).unwrap();
        let seq = elem_sym_all(&list);
        assert_eq!(seq.raw(), &[rat_int(1), rat_int(1), rat(1, 4), rat(1, 4)]);
    }

    #[test]
    fn degenerate_empty_list() {
        let seq = seq_of(vec![], vec![]);
        assert_eq!(seq.n(), 0);
        assert_eq!(seq.raw(), &[rat_int(1)]);
    }

    #[test]
    fn mean_e_values() {
        let seq = seq_of(vec![], vec![1, 1, 1]);
        assert_eq!(seq.mean_e(2).unwrap(), rat_int(1));
        assert_eq!(seq.mean_e(0).unwrap(), rat_int(1));
        let seq = seq_of(vec![(0, 1), (0, 1)], vec![]);
        assert_eq!(seq.mean_e(2).unwrap(), rat(1, 3));
        assert!(seq.mean_e(5).is_err());
    }

    #[test]
    fn norm_p_on_imaginary_pairs_is_one_at_even_indices() {
        for m in 1..=6 {
            let seq = seq_of(vec![(0, 1); m], vec![]);
            for j in 0..=m {
                assert_eq!(seq.norm_p(2 * j).unwrap(), PNorm::Exact(rat_int(1)));
            }
        }
    }

    #[test]
    fn norm_p_rejects_beyond_n() {
        let seq = seq_of(vec![(0, 1)], vec![]);
        assert!(seq.norm_p(3).is_err());
        assert!(seq.norm_p(2).is_ok());
    }

    #[test]
    fn formal_tau_sequence_and_products() {
        // Two imaginary pairs plus the formal pair: n = 6.
        let list = SelfConjugateList::with_formal_tau(
            vec![(rat_int(0), rat_int(1)); 2],
            vec![],
            rat_int(2),
        )
        .unwrap();
        let seq = elem_sym_all(&list);
        assert_eq!(seq.n(), 6);
        assert!(seq.is_formal());
        // e_{2i} = C(2,i) + 2·C(2,i-1), odd cofactors 2·C(2,i).
        assert_eq!(seq.e_numeric(2), Some(rat_int(4)));
        assert_eq!(seq.e_numeric(4), Some(rat_int(5)));
        assert_eq!(seq.e_numeric(6), Some(rat_int(2)));
        assert_eq!(seq.e_numeric(1), None);
        // Products with an even number of odd factors are exact.
        assert_eq!(seq.product(&[1, 1]), Some(rat_int(8)));
        assert_eq!(seq.product(&[1, 3]), Some(rat_int(16)));
        assert_eq!(seq.product(&[2, 1]), None);
        assert_eq!(seq.product(&[-1, 3]), Some(rat_int(0)));
        assert!(seq.mean_e(2).is_err());
        // P_{2i+1} cofactor is constant 2 on this family.
        assert_eq!(seq.norm_p(1).unwrap(), PNorm::FormalOddScale(rat_int(2)));
        assert_eq!(seq.norm_p(3).unwrap(), PNorm::FormalOddScale(rat_int(2)));
    }

    #[test]
    fn tau_requires_imaginary_base() {
        let err =
            SelfConjugateList::with_formal_tau(vec![(rat_int(1), rat_int(1))], vec![], rat_int(2))
                .unwrap_err();
        assert_eq!(err, ListError::TauBaseNotImaginary);
    }

    #[test]
    fn hypothesis_gates() {
        assert!(SelfConjugateList::new(vec![(rat_int(-1), rat_int(0))], vec![]).is_err());
        assert!(SelfConjugateList::new(vec![], vec![rat_int(-2)]).is_err());
        // b is canonicalized, not rejected.
        let l = SelfConjugateList::new(vec![(rat_int(1), rat_int(-3))], vec![]).unwrap();
        assert_eq!(l.pairs()[0].1, rat_int(3));
    }

    #[test]
    fn wedge_membership() {
        let w = WedgeSpec::new(rat(1, 2)).unwrap();
        let inside = SelfConjugateList::new(vec![(rat_int(1), rat_int(1))], vec![]).unwrap();
        assert!(inside.wedge_member(&w));
        let w_tight = WedgeSpec::new(rat(1, 100)).unwrap();
        let imaginary = SelfConjugateList::new(vec![(rat_int(0), rat_int(1))], vec![]).unwrap();
        assert!(!imaginary.wedge_member(&w_tight));
        // Boundary case a=3, b=4, λ=9/25: equality counts as inside.
        let w_boundary = WedgeSpec::new(rat(9, 25)).unwrap();
        let boundary = SelfConjugateList::new(vec![(rat_int(3), rat_int(4))], vec![]).unwrap();
        assert!(boundary.wedge_member(&w_boundary));
        // Zero real with λ > 0: on the boundary, counted inside.
        let zero_real = SelfConjugateList::new(vec![], vec![rat_int(0)]).unwrap();
        assert!(zero_real.wedge_member(&w_tight));
    }

    #[test]
    fn permutation_invariance() {
        let a = seq_of(vec![(1, 2), (0, 3), (2, 0)], vec![1, 4]);
        let b = seq_of(vec![(2, 0), (1, 2), (0, 3)], vec![4, 1]);
        assert_eq!(a, b);
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let list =
            SelfConjugateList::with_formal_tau(vec![(rat_int(0), rat(3, 7))], vec![], rat(2, 3))
                .unwrap();
        let json = list.to_json();
        assert_eq!(json, r#"{"pairs":[["0","3/7"]],"reals":[],"tau":"2/3"}"#);
        assert_eq!(SelfConjugateList::from_json(&json).unwrap(), list);

        let plain =
            SelfConjugateList::new(vec![(rat(1, 2), rat_int(1))], vec![rat_int(0), rat(5, 3)])
                .unwrap();
        let json = plain.to_json();
        assert_eq!(json, r#"{"pairs":[["1/2","1"]],"reals":["0","5/3"]}"#);
        assert_eq!(SelfConjugateList::from_json(&json).unwrap(), plain);
    }

    #[test]
    fn even_multiplicity_detection() {
        let l = SelfConjugateList::new(vec![], vec![rat_int(2), rat_int(2)]).unwrap();
        assert!(l.reals_have_even_multiplicity());
        let l = SelfConjugateList::new(vec![], vec![rat_int(2), rat_int(2), rat_int(1)]).unwrap();
        assert!(!l.reals_have_even_multiplicity());
        let l = SelfConjugateList::new(vec![(rat_int(1), rat_int(1))], vec![]).unwrap();
        assert!(l.is_pair_only() && l.reals_have_even_multiplicity());
    }

    #[test]
    fn scaling_scales_e_k_by_powers() {
        let list = SelfConjugateList::new(
            vec![(rat_int(1), rat_int(2)), (rat(1, 2), rat_int(0))],
            vec![rat_int(3)],
        )
        .unwrap();
        let c = rat(3, 2);
        let seq = elem_sym_all(&list);
        let scaled = elem_sym_all(&list.scale(&c));
        for k in 0..=list.n() {
            assert_eq!(scaled.raw()[k], seq.raw()[k].clone() * c.pow(k as i32));
        }
    }
}
