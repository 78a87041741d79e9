//! Constructors for the extremal and equality-case lists, plus a
//! deterministic random list generator for batch verification.
//!
//! The generator derives an independent stream per `(n, seed, profile)`
//! from a counter-based mix, so sharded batch runs reproduce exactly.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::esf::{ListError, SelfConjugateList, WedgeSpec};
use crate::scalar::{rat_int, Rational};

/// The purely imaginary list `(i, −i)` repeated `m` times: even `e`'s are
/// binomials, odd `e`'s vanish. It forces the constant to zero for
/// all-odd index patterns and gives equality in the even product family.
pub fn imaginary_unit_pairs(m: usize) -> SelfConjugateList {
    assert!(m >= 1, "need at least one pair");
    SelfConjugateList::new(vec![(rat_int(0), rat_int(1)); m], vec![])
        .expect("imaginary pairs are always valid")
}

/// `m` pairs `(0, eps)` plus the unpaired real 1: the ratio
/// `e_{2k}e_{2l} / (e_{2k−1}e_{2l+1})` collapses like `eps²`, showing no
/// positive constant survives unpaired reals.
pub fn imaginary_pairs_plus_unit(m: usize, eps: &Rational) -> Result<SelfConjugateList, ListError> {
    assert!(m >= 1, "need at least one pair");
    if !eps.is_positive() {
        return Err(ListError::NegativeReal(eps.to_string()));
    }
    SelfConjugateList::new(vec![(rat_int(0), eps.clone()); m], vec![rat_int(1)])
}

/// Alias of [`imaginary_unit_pairs`]: the same list demonstrates
/// `P_{2i} = 1` for all `i`, hence equality in the even chain.
pub fn even_chain_equality_list(m: usize) -> SelfConjugateList {
    imaginary_unit_pairs(m)
}

/// `m − 1` imaginary unit pairs plus the real pair `(t, t)` with
/// `t² = tau`: odd `P`'s are the constant `2t` and `tau = (m − k)/k`
/// gives equality in the squared family at index `k`.
///
/// When `tau` is a perfect rational square the two reals are stored
/// explicitly; otherwise the list carries `tau` formally.
pub fn odd_chain_equality_list(m: usize, tau: &Rational) -> Result<SelfConjugateList, ListError> {
    assert!(m >= 2, "need at least two pairs' worth of entries");
    if tau.is_negative() {
        return Err(ListError::NegativeTau(tau.to_string()));
    }
    let pairs = vec![(rat_int(0), rat_int(1)); m - 1];
    match exact_sqrt(tau) {
        Some(t) => SelfConjugateList::new(pairs, vec![t.clone(), t]),
        None => SelfConjugateList::with_formal_tau(pairs, vec![], tau.clone()),
    }
}

/// Exact rational square root, when one exists.
pub fn exact_sqrt(v: &Rational) -> Option<Rational> {
    if v.is_negative() {
        return None;
    }
    let num = v.numer().sqrt();
    let den = v.denom().sqrt();
    if &(&num * &num) == v.numer() && &(&den * &den) == v.denom() {
        Some(Rational::new(num, den))
    } else {
        None
    }
}

/// Entry magnitude profiles for random lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Profile {
    /// Small rationals over a box.
    UniformBox,
    /// Heavy bias toward zeros and purely imaginary pairs.
    BoundaryHeavy,
    /// Small nonnegative integers.
    IntegerSmall,
}

impl Profile {
    pub const ALL: [Profile; 3] = [
        Profile::UniformBox,
        Profile::BoundaryHeavy,
        Profile::IntegerSmall,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Profile::UniformBox => "uniform-box",
            Profile::BoundaryHeavy => "boundary-heavy",
            Profile::IntegerSmall => "integer-small",
        }
    }
}

impl std::fmt::Display for Profile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "uniform-box" => Ok(Profile::UniformBox),
            "boundary-heavy" => Ok(Profile::BoundaryHeavy),
            "integer-small" => Ok(Profile::IntegerSmall),
            other => Err(format!("unknown profile {other:?}")),
        }
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Derives an independent substream seed; used to shard batches.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    splitmix(base ^ splitmix(index))
}

fn sample_scalar(rng: &mut ChaCha8Rng, profile: Profile) -> Rational {
    match profile {
        Profile::UniformBox => Rational::new(
            BigInt::from(rng.gen_range(0..=16)),
            BigInt::from(rng.gen_range(1..=4)),
        ),
        Profile::BoundaryHeavy => {
            if rng.gen_bool(0.5) {
                Rational::zero()
            } else {
                Rational::new(
                    BigInt::from(rng.gen_range(0..=8)),
                    BigInt::from(rng.gen_range(1..=3)),
                )
            }
        }
        Profile::IntegerSmall => rat_int(rng.gen_range(0..=4)),
    }
}

fn sample_positive(rng: &mut ChaCha8Rng, profile: Profile) -> Rational {
    loop {
        let v = sample_scalar(rng, profile);
        if v.is_positive() {
            return v;
        }
    }
}

const WEDGE_RESAMPLE_CAP: usize = 4096;

/// Deterministic random list: same `(n, seed, profile, wedge)` always
/// yields the same list. Pairs are rejection-resampled into the wedge
/// when one is given; the boundary-heavy profile forces at least one
/// purely imaginary pair (unless the wedge forbids it).
pub fn random_list(
    n: usize,
    seed: u64,
    profile: Profile,
    wedge: Option<&WedgeSpec>,
) -> SelfConjugateList {
    assert!(n >= 1);
    let mix = splitmix(seed ^ splitmix(n as u64) ^ splitmix(profile as u64 + 1));
    let mut rng = ChaCha8Rng::seed_from_u64(mix);
    let max_pairs = n / 2;
    let mut m = rng.gen_range(0..=max_pairs);
    if profile == Profile::BoundaryHeavy && max_pairs >= 1 {
        m = m.max(1);
    }
    let s = n - 2 * m;
    let lambda_positive = wedge.is_some_and(|w| w.lambda().is_positive());
    let mut pairs = Vec::with_capacity(m);
    for i in 0..m {
        let force_imaginary = profile == Profile::BoundaryHeavy && i == 0 && !lambda_positive;
        let pair = if force_imaginary {
            (Rational::zero(), sample_positive(&mut rng, profile))
        } else {
            sample_pair(&mut rng, profile, wedge)
        };
        pairs.push(pair);
    }
    let reals = (0..s).map(|_| sample_scalar(&mut rng, profile)).collect();
    SelfConjugateList::new(pairs, reals).expect("sampled entries are nonnegative")
}

fn sample_pair(
    rng: &mut ChaCha8Rng,
    profile: Profile,
    wedge: Option<&WedgeSpec>,
) -> (Rational, Rational) {
    for _ in 0..WEDGE_RESAMPLE_CAP {
        let a = sample_scalar(rng, profile);
        let b = sample_scalar(rng, profile);
        let inside = match wedge {
            None => true,
            Some(w) => {
                let a2 = &a * &a;
                a2.clone() >= w.lambda() * (&a2 + &b * &b)
            }
        };
        if inside {
            return (a, b);
        }
    }
    // The cap only trips for extreme lambdas; a real pair is always inside.
    (sample_scalar(rng, profile), Rational::zero())
}
