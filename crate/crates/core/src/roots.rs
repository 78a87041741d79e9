//! Even/odd part extraction and exact real-root counting for
//! interlacing verification and the half-degree reduction path.
//!
//! Root counting is by Sturm chains over exact rationals; isolation is by
//! repeated bisection of the Cauchy interval. No floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::esf::{elem_sym_all, EsfSequence, SelfConjugateList};
use crate::ineq::{check_gen_newton, check_t14, in_range_indices, Family};
use crate::scalar::{rat_int, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootLabError {
    #[error("polynomial has nonreal roots: {real} distinct real of degree {degree}")]
    NotAllReal { real: usize, degree: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("formal-tau sequences have no numeric odd coefficients")]
    FormalMode,
}

/// Dense univariate polynomial over exact rationals, lowest degree first.
/// The zero polynomial stores no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_int(i as i64))
                .collect(),
        )
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let mut out = vec![Rational::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlead = divisor.leading().unwrap().clone();
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        while rem.len() > ddeg {
            let rdeg = rem.len() - 1;
            let factor = rem.last().unwrap() / &dlead;
            quot[rdeg - ddeg] = factor.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let delta = c * &factor;
                rem[rdeg - ddeg + i] -= delta;
            }
            rem.pop(); // the subtraction cancelled the top coefficient
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly { coeffs: rem })
    }

    /// Scales by a positive rational so the coefficients become coprime
    /// integers; signs (hence roots and Sturm variations) are unchanged.
    fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * &lcm / c.denom())
            .collect();
        let mut gcd = BigInt::zero();
        for v in &ints {
            gcd = gcd.gcd(v);
        }
        UniPoly {
            coeffs: ints
                .into_iter()
                .map(|v| Rational::from_integer(v / &gcd))
                .collect(),
        }
    }

    /// Primitive polynomial gcd with positive leading coefficient.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let mut x = a.primitive();
        let mut y = b.primitive();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r.primitive();
        }
        if x.leading().is_some_and(|c| c.is_negative()) {
            x = x.neg();
        }
        x
    }

    /// The square-free part `p / gcd(p, p')`.
    pub fn square_free_part(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = UniPoly::gcd(self, &self.derivative());
        if g.degree() == Some(0) {
            return self.primitive();
        }
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q.primitive()
    }

    /// Square-free decomposition `p = c · ∏ f_i^i` (Yun); returns the
    /// square-free, pairwise coprime factors `f_1, f_2, ...`.
    pub fn yun_factors(&self) -> Vec<UniPoly> {
        if self.is_zero() || self.degree() == Some(0) {
            return Vec::new();
        }
        let p = self.primitive();
        let dp = p.derivative();
        let mut a = UniPoly::gcd(&p, &dp);
        let (mut b, r) = p.div_rem(&a);
        debug_assert!(r.is_zero());
        let (mut c, r) = dp.div_rem(&a);
        debug_assert!(r.is_zero());
        let mut factors = Vec::new();
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                factors.push(b);
                break;
            }
            a = UniPoly::gcd(&b, &d);
            factors.push(a.clone());
            let (nb, r) = b.div_rem(&a);
            debug_assert!(r.is_zero());
            b = nb;
            let (nc, r) = d.div_rem(&a);
            debug_assert!(r.is_zero());
            c = nc;
            if b.degree() == Some(0) {
                break;
            }
        }
        factors
    }

    /// Cauchy bound: all real roots lie strictly inside `(-B, B)` for
    /// `B = 1 + max|c_i| / |lead|`.
    pub fn cauchy_bound(&self) -> Rational {
        let lead = self.leading().expect("zero polynomial has no root bound");
        let max = self
            .coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero);
        rat_int(1) + max / lead.abs()
    }
}

/// Sturm chain of the square-free part of a polynomial.
pub struct SturmChain {
    chain: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Result<Self, RootLabError> {
        if p.is_zero() {
            return Err(RootLabError::ZeroPolynomial);
        }
        let sf = p.square_free_part();
        let mut chain = vec![sf.clone(), sf.derivative().primitive()];
        while !chain.last().unwrap().is_zero() {
            let len = chain.len();
            let (_, r) = chain[len - 2].div_rem(&chain[len - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().primitive());
        }
        Ok(SturmChain { chain })
    }

    /// Sign variations at `x`, zeros skipped.
    fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let sign = v.is_positive();
            if let Some(prev) = last {
                if prev != sign {
                    count += 1;
                }
            }
            last = Some(sign);
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        assert!(lo < hi, "need lo < hi");
        self.variations(lo) - self.variations(hi)
    }
}

/// Distinct real roots in `(lo, hi]` of `p` (square-free part taken
/// internally), by Sturm sign-variation counts.
pub fn sturm_count(p: &UniPoly, lo: &Rational, hi: &Rational) -> Result<usize, RootLabError> {
    Ok(SturmChain::new(p)?.count(lo, hi))
}

/// Whether every root is real: the global Sturm count over the Cauchy
/// interval must reach the square-free degree.
pub fn all_roots_real(p: &UniPoly) -> Result<bool, RootLabError> {
    if p.is_zero() {
        return Err(RootLabError::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(true);
    }
    let sf = p.square_free_part();
    let chain = SturmChain::new(&sf)?;
    let bound = sf.cauchy_bound();
    Ok(chain.count(&-bound.clone(), &bound) == sf.degree().unwrap())
}

/// Sorted disjoint rational intervals, each containing exactly one
/// distinct real root, with per-root multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootIsolation {
    /// Half-open isolating intervals `(lo, hi]`, sorted and disjoint.
    pub intervals: Vec<(Rational, Rational)>,
    /// Multiplicity of the root inside each interval.
    pub multiplicities: Vec<usize>,
}

impl RootIsolation {
    pub fn distinct_count(&self) -> usize {
        self.intervals.len()
    }

    pub fn total_with_multiplicity(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

/// Isolates the roots of a polynomial whose roots are all real; rejects
/// other inputs with [`RootLabError::NotAllReal`].
pub fn isolate_roots(p: &UniPoly) -> Result<RootIsolation, RootLabError> {
    if p.is_zero() {
        return Err(RootLabError::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(RootIsolation {
            intervals: Vec::new(),
            multiplicities: Vec::new(),
        });
    }
    let sf = p.square_free_part();
    let chain = SturmChain::new(&sf)?;
    let degree = sf.degree().unwrap();
    let bound = sf.cauchy_bound();
    let v_lo = chain.variations(&-bound.clone());
    let v_hi = chain.variations(&bound);
    let total = v_lo - v_hi;
    if total != degree {
        return Err(RootLabError::NotAllReal {
            real: total,
            degree,
        });
    }
    // Bisect, carrying the endpoint variation counts to avoid
    // re-evaluating the chain.
    let mut intervals = Vec::new();
    let mut stack = vec![(-bound.clone(), bound.clone(), v_lo, v_hi)];
    while let Some((lo, hi, v_lo, v_hi)) = stack.pop() {
        let count = v_lo - v_hi;
        if count == 0 {
            continue;
        }
        if count == 1 {
            intervals.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / rat_int(2);
        let v_mid = chain.variations(&mid);
        stack.push((mid.clone(), hi, v_mid, v_hi));
        stack.push((lo, mid, v_lo, v_mid));
    }
    intervals.sort_by(|a, b| a.0.cmp(&b.0));
    let yun = YunChains::new(p)?;
    let multiplicities = intervals
        .iter()
        .map(|(lo, hi)| yun.multiplicity(lo, hi))
        .collect();
    Ok(RootIsolation {
        intervals,
        multiplicities,
    })
}

/// Sturm chains of the square-free (Yun) factors of a polynomial, for
/// multiplicity lookups on isolating intervals.
struct YunChains {
    chains: Vec<(usize, SturmChain)>,
}

impl YunChains {
    fn new(p: &UniPoly) -> Result<Self, RootLabError> {
        let mut chains = Vec::new();
        for (idx, f) in p.yun_factors().into_iter().enumerate() {
            if f.degree().unwrap_or(0) >= 1 {
                chains.push((idx + 1, SturmChain::new(&f)?));
            }
        }
        Ok(YunChains { chains })
    }

    /// Multiplicity of the unique root inside the isolating interval
    /// `(lo, hi]`; zero when the polynomial has no root there.
    fn multiplicity(&self, lo: &Rational, hi: &Rational) -> usize {
        for (mult, chain) in &self.chains {
            if chain.count(lo, hi) > 0 {
                return *mult;
            }
        }
        0
    }
}

/// The monic polynomial `x^n + e_1 x^{n-1} + ... + e_n` whose roots are
/// the negated list entries.
pub fn char_poly(seq: &EsfSequence) -> Result<UniPoly, RootLabError> {
    let n = seq.n();
    let mut coeffs = Vec::with_capacity(n + 1);
    for i in (0..=n).rev() {
        coeffs.push(seq.e_numeric(i as isize).ok_or(RootLabError::FormalMode)?);
    }
    Ok(UniPoly::new(coeffs))
}

/// Splits `x^n + a_1 x^{n-1} + ... + a_n` into its alternating-sign parts
/// `x^n − a_2 x^{n-2} + a_4 x^{n-4} − ...` and
/// `a_1 x^{n-1} − a_3 x^{n-3} + a_5 x^{n-5} − ...`.
pub fn even_odd_parts(p: &UniPoly) -> (UniPoly, UniPoly) {
    let n = p.degree().unwrap_or(0);
    let coeff_by_offset = |i: usize| -> Rational {
        // a_i is the coefficient of x^{n-i}
        p.coeffs()
            .get(n - i)
            .cloned()
            .unwrap_or_else(Rational::zero)
    };
    let mut even = vec![Rational::zero(); n + 1];
    let mut odd = vec![Rational::zero(); n + 1];
    let mut r = 0usize;
    while 2 * r <= n {
        let sign = if r % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        even[n - 2 * r] = sign * coeff_by_offset(2 * r);
        r += 1;
    }
    let mut r = 0usize;
    while 2 * r + 1 <= n {
        let sign = if r % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        odd[n - 2 * r - 1] = sign * coeff_by_offset(2 * r + 1);
        r += 1;
    }
    (UniPoly::new(even), UniPoly::new(odd))
}

/// The half-degree polynomials in `w`: the even one has coefficients
/// `(−1)^r e_{2r}` and degree `⌊n/2⌋`; the odd one (present only when
/// `e_1 > 0`) has coefficients `(−1)^r e_{2r+1} / e_1` and degree
/// `⌈n/2⌉ − 1`.
pub fn w_polynomials(seq: &EsfSequence) -> Result<(UniPoly, Option<UniPoly>), RootLabError> {
    let n = seq.n();
    let e = |i: usize| -> Result<Rational, RootLabError> {
        seq.e_numeric(i as isize).ok_or(RootLabError::FormalMode)
    };
    let m_even = n / 2;
    let mut even = vec![Rational::zero(); m_even + 1];
    for r in 0..=m_even {
        let sign = if r % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        even[m_even - r] = sign * e(2 * r)?;
    }
    let odd = if n >= 1 && e(1)?.is_positive() {
        let e1 = e(1)?;
        let m_odd = n.div_ceil(2) - 1;
        let mut odd = vec![Rational::zero(); m_odd + 1];
        for r in 0..=m_odd {
            let sign = if r % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            odd[m_odd - r] = sign * e(2 * r + 1)? / &e1;
        }
        Some(UniPoly::new(odd))
    } else {
        None
    };
    Ok((UniPoly::new(even), odd))
}

/// Interlacing verdict for the even/odd parts of the characteristic
/// polynomial of a list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterlaceReport {
    pub even_all_real: bool,
    /// `None` when the odd part is identically zero.
    pub odd_all_real: Option<bool>,
    /// `None` when vacuous (odd part zero).
    pub interlaces: Option<bool>,
    /// The odd part vanished identically (all odd e's zero).
    pub odd_part_zero: bool,
    /// The odd part's degree dropped below `n − 1` without vanishing.
    pub odd_degree_deficit: bool,
    pub pass: bool,
}

/// Verifies that the two alternating-sign parts have all-real roots and
/// that those roots weakly interlace, with multiplicity handled through
/// the square-free decomposition. Failures are reported, not panicked:
/// they would be counterexamples to a proven statement.
pub fn verify_interlacing(x: &SelfConjugateList) -> Result<InterlaceReport, RootLabError> {
    let seq = elem_sym_all(x);
    let p = char_poly(&seq)?;
    let (even, odd) = even_odd_parts(&p);
    if odd.is_zero() {
        let even_all_real = all_roots_real(&even)?;
        return Ok(InterlaceReport {
            even_all_real,
            odd_all_real: None,
            interlaces: None,
            odd_part_zero: true,
            odd_degree_deficit: false,
            pass: even_all_real,
        });
    }
    let n = p.degree().unwrap_or(0);
    let odd_degree_deficit = odd.degree() != Some(n.saturating_sub(1));

    let even_real = all_roots_real(&even)?;
    let odd_real = all_roots_real(&odd)?;
    if !even_real || !odd_real {
        return Ok(InterlaceReport {
            even_all_real: even_real,
            odd_all_real: Some(odd_real),
            interlaces: Some(false),
            odd_part_zero: false,
            odd_degree_deficit,
            pass: false,
        });
    }

    // Union roots: isolate the square-free part of the product, then read
    // each part's multiplicity at every union root off its Yun factors.
    // A union interval isolates one root, so each factor chain counts 0
    // or 1 there.
    let union_sf = even
        .square_free_part()
        .mul(&odd.square_free_part())
        .square_free_part();
    let union = isolate_roots(&union_sf)?;
    let even_yun = YunChains::new(&even)?;
    let odd_yun = YunChains::new(&odd)?;

    // Positions (by union-root index) of each part's roots, repeated with
    // multiplicity.
    let mut even_positions = Vec::new();
    let mut odd_positions = Vec::new();
    for (idx, (lo, hi)) in union.intervals.iter().enumerate() {
        even_positions.extend(std::iter::repeat(idx).take(even_yun.multiplicity(lo, hi)));
        odd_positions.extend(std::iter::repeat(idx).take(odd_yun.multiplicity(lo, hi)));
    }

    // Weak interlacing: between consecutive roots of the larger multiset
    // sits exactly one of the smaller; with union indices this is
    // even[j] <= odd[j] <= even[j+1].
    let mut interlaces = even_positions.len() == odd_positions.len() + 1;
    if interlaces {
        for (j, &oj) in odd_positions.iter().enumerate() {
            if !(even_positions[j] <= oj && oj <= even_positions[j + 1]) {
                interlaces = false;
                break;
            }
        }
    }
    Ok(InterlaceReport {
        even_all_real: true,
        odd_all_real: Some(true),
        interlaces: Some(interlaces),
        odd_part_zero: false,
        odd_degree_deficit,
        pass: interlaces,
    })
}

/// Report for the half-degree reduction path: the `w`-polynomials have
/// real nonnegative roots, their coefficients reproduce the even/odd
/// subsequences, and the generalized Newton verdicts on the half-degree
/// lists coincide with the even/odd product families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfDegreeReport {
    pub even_roots_real_nonneg: bool,
    /// `None` when `e_1 = 0` (odd path vacuous).
    pub odd_roots_real_nonneg: Option<bool>,
    pub coefficients_reproduce_esf: bool,
    pub even_family_agrees: bool,
    /// `None` when `e_1 = 0`.
    pub odd_family_agrees: Option<bool>,
    pub e1_zero: bool,
    pub pass: bool,
}

fn real_nonneg_roots(p: &UniPoly) -> bool {
    if p.degree().unwrap_or(0) == 0 {
        return true;
    }
    if !all_roots_real(p).unwrap_or(false) {
        return false;
    }
    let chain = SturmChain::new(p).expect("nonzero by degree check");
    let bound = p.square_free_part().cauchy_bound();
    let zero = Rational::zero();
    let mut in_left_half = chain.count(&-bound, &zero);
    if p.eval(&zero).is_zero() {
        in_left_half -= 1; // (−B, 0] includes a root at zero, which is fine
    }
    in_left_half == 0
}

pub fn verify_half_degree_path(x: &SelfConjugateList) -> Result<HalfDegreeReport, RootLabError> {
    let seq = elem_sym_all(x);
    let n = seq.n();
    let (w_even, w_odd) = w_polynomials(&seq)?;
    let e1_zero = w_odd.is_none();

    let even_roots_real_nonneg = real_nonneg_roots(&w_even);
    let odd_roots_real_nonneg = w_odd.as_ref().map(real_nonneg_roots);

    // Read the half-degree esf values back off the coefficients.
    let m_even = n / 2;
    let mut even_values = Vec::with_capacity(m_even + 1);
    let mut coefficients_reproduce_esf = true;
    for r in 0..=m_even {
        let sign = if r % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        let c = w_even
            .coeffs()
            .get(m_even - r)
            .cloned()
            .unwrap_or_else(Rational::zero);
        let value = sign * c;
        if Some(value.clone()) != seq.e_numeric(2 * r as isize) {
            coefficients_reproduce_esf = false;
        }
        even_values.push(value);
    }
    let even_half = EsfSequence::from_values(even_values);

    // Generalized Newton on the half-degree list vs the even family.
    let mut even_family_agrees = true;
    for (k, l) in in_range_indices(Family::T14I, n) {
        let newton = check_gen_newton(&even_half, k, l).expect("in-range by construction");
        let family = check_t14(&seq, Family::T14I, k, l).expect("in-range by construction");
        if newton.holds != family.holds {
            even_family_agrees = false;
        }
    }

    let odd_family_agrees = if let Some(w_odd) = &w_odd {
        let e1 = seq.e_numeric(1).expect("non-formal here");
        let m_odd = n.div_ceil(2) - 1;
        let mut odd_values = Vec::with_capacity(m_odd + 1);
        for r in 0..=m_odd {
            let sign = if r % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            let c = w_odd
                .coeffs()
                .get(m_odd - r)
                .cloned()
                .unwrap_or_else(Rational::zero);
            let value = sign * c;
            if Some(value.clone() * &e1) != seq.e_numeric((2 * r + 1) as isize) {
                coefficients_reproduce_esf = false;
            }
            odd_values.push(value);
        }
        let odd_half = EsfSequence::from_values(odd_values);
        let mut agrees = true;
        for (k, l) in in_range_indices(Family::T14II, n) {
            let newton = check_gen_newton(&odd_half, k, l).expect("in-range by construction");
            let family = check_t14(&seq, Family::T14II, k, l).expect("in-range by construction");
            if newton.holds != family.holds {
                agrees = false;
            }
        }
        Some(agrees)
    } else {
        None
    };

    // With e_1 = 0 every odd e vanishes and the odd family must hold as
    // an equality of zero products.
    let odd_vacuous_ok = if e1_zero {
        in_range_indices(Family::T14II, n)
            .into_iter()
            .all(|(k, l)| {
                check_t14(&seq, Family::T14II, k, l)
                    .map(|r| r.holds)
                    .unwrap_or(false)
            })
    } else {
        true
    };

    let pass = even_roots_real_nonneg
        && odd_roots_real_nonneg.unwrap_or(true)
        && coefficients_reproduce_esf
        && even_family_agrees
        && odd_family_agrees.unwrap_or(true)
        && odd_vacuous_ok;
    Ok(HalfDegreeReport {
        even_roots_real_nonneg,
        odd_roots_real_nonneg,
        coefficients_reproduce_esf,
        even_family_agrees,
        odd_family_agrees,
        e1_zero,
        pass,
    })
}
