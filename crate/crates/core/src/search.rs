//! Randomized estimation of the best-possible constant in the product
//! inequalities: random restarts plus coordinate-wise multiplicative
//! descent, scored in floating point for speed, with the winner re-checked
//! in exact arithmetic before it is reported or stored.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::esf::{elem_sym_all, SelfConjugateList};
use crate::extremal::{derive_seed, random_list, Profile};
use crate::ineq::{check_t14, Family};
use crate::scalar::{rat_int, Rational};

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid indices for {family:?}: n={n}, k={k}, l={l}, h={h}")]
    InvalidIndices {
        family: SearchFamily,
        n: usize,
        k: usize,
        l: usize,
        h: usize,
    },
    #[error(
        "soundness violation: exact ratio below 1 for proven family {family:?} (witness {witness})"
    )]
    Soundness {
        family: SearchFamily,
        witness: String,
    },
    #[error("corpus io: {0}")]
    CorpusIo(#[from] std::io::Error),
    #[error("corpus corrupt at line {line}: {message}")]
    CorpusCorrupt { line: usize, message: String },
}

/// Search targets: the five proven product families, plus the all-odd
/// index probe (where no positive constant can exist).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchFamily {
    T14I,
    T14II,
    T14III,
    T14IV,
    T14V,
    /// `e_k e_l` vs `e_{k−h} e_{l+h}` with `k`, `l`, `h` all odd and
    /// probe constant 1.
    OddOddOdd,
}

impl SearchFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            SearchFamily::T14I => "i",
            SearchFamily::T14II => "ii",
            SearchFamily::T14III => "iii",
            SearchFamily::T14IV => "iv",
            SearchFamily::T14V => "v",
            SearchFamily::OddOddOdd => "odd-odd-odd",
        }
    }

    fn proven(&self) -> Option<Family> {
        match self {
            SearchFamily::T14I => Some(Family::T14I),
            SearchFamily::T14II => Some(Family::T14II),
            SearchFamily::T14III => Some(Family::T14III),
            SearchFamily::T14IV => Some(Family::T14IV),
            SearchFamily::T14V => Some(Family::T14V),
            SearchFamily::OddOddOdd => None,
        }
    }
}

impl std::str::FromStr for SearchFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "i" | "t14-i" => Ok(SearchFamily::T14I),
            "ii" | "t14-ii" => Ok(SearchFamily::T14II),
            "iii" | "t14-iii" => Ok(SearchFamily::T14III),
            "iv" | "t14-iv" => Ok(SearchFamily::T14IV),
            "v" | "t14-v" => Ok(SearchFamily::T14V),
            "odd-odd-odd" | "ooo" => Ok(SearchFamily::OddOddOdd),
            other => Err(format!("unknown search family {other:?}")),
        }
    }
}

impl std::fmt::Display for SearchFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// Best ratio found for one instance, with its exact witness.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub family: SearchFamily,
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub h: usize,
    /// Floating rendering of the exact witness ratio.
    pub best_ratio: f64,
    pub witness: SelfConjugateList,
    pub iterations: u64,
    pub budget: u64,
    pub seed: u64,
    /// Running best objective after each restart, in restart order;
    /// non-increasing by construction.
    pub progress: Vec<f64>,
}

impl SearchResult {
    pub fn key(&self) -> String {
        format!(
            "{}:{}:{}:{}:{}",
            self.family.tag(),
            self.n,
            self.k,
            self.l,
            self.h
        )
    }
}

/// The e-index quadruple `(lhs_a, lhs_b, rhs_a, rhs_b)` for an instance.
fn instance_indices(
    family: SearchFamily,
    n: usize,
    k: usize,
    l: usize,
    h: usize,
) -> Option<(usize, usize, usize, usize)> {
    let valid = |a: usize, b: usize, c: usize, d: usize| {
        (a <= n && b <= n && c <= n && d <= n).then_some((a, b, c, d))
    };
    match family {
        SearchFamily::T14I => (1 <= k && k <= l && l + 1 <= n / 2)
            .then(|| (2 * k, 2 * l, 2 * k - 2, 2 * l + 2))
            .and_then(|(a, b, c, d)| valid(a, b, c, d)),
        SearchFamily::T14II => (1 <= k && k <= l && l + 2 <= n.div_ceil(2))
            .then(|| (2 * k + 1, 2 * l + 1, 2 * k - 1, 2 * l + 3))
            .and_then(|(a, b, c, d)| valid(a, b, c, d)),
        SearchFamily::T14III => (1 <= k && k <= l && 2 * l + 1 <= n)
            .then(|| (2 * k - 1, 2 * l, 2 * k - 2, 2 * l + 1))
            .and_then(|(a, b, c, d)| valid(a, b, c, d)),
        SearchFamily::T14IV => (1 <= k && k <= l && 2 * l + 2 <= n)
            .then(|| (2 * k, 2 * l + 1, 2 * k - 1, 2 * l + 2))
            .and_then(|(a, b, c, d)| valid(a, b, c, d)),
        SearchFamily::T14V => (n % 2 == 0 && 1 <= k && k <= l && l + 1 <= n / 2)
            .then(|| (2 * k, 2 * l, 2 * k - 1, 2 * l + 1))
            .and_then(|(a, b, c, d)| valid(a, b, c, d)),
        SearchFamily::OddOddOdd => {
            (k % 2 == 1 && l % 2 == 1 && h % 2 == 1 && 1 <= k && k <= l && h <= k && l + h <= n)
                .then_some((k, l, k - h, l + h))
        }
    }
}

/// The family constant as a float, for the objective only.
fn constant_f64(family: SearchFamily, n: usize, k: usize, l: usize) -> f64 {
    match family {
        SearchFamily::T14I => {
            let m = n / 2;
            ((l + 1) * (m - k + 1)) as f64 / (k * (m - l)) as f64
        }
        SearchFamily::T14II => {
            let m = n.div_ceil(2);
            ((l + 1) * (m - k)) as f64 / (k * (m - l - 1)) as f64
        }
        SearchFamily::T14III | SearchFamily::T14IV | SearchFamily::OddOddOdd => 1.0,
        SearchFamily::T14V => ((l * (n - 2 * k)) as f64 / (k * (n - 2 * l)) as f64).sqrt(),
    }
}

/// Mutable search candidate: rational coordinates with a float mirror.
#[derive(Clone)]
struct Candidate {
    pairs: Vec<(Rational, Rational)>,
    reals: Vec<Rational>,
}

impl Candidate {
    fn from_list(list: &SelfConjugateList) -> Self {
        Candidate {
            pairs: list.pairs().to_vec(),
            reals: list.reals().to_vec(),
        }
    }

    fn to_list(&self) -> SelfConjugateList {
        SelfConjugateList::new(self.pairs.clone(), self.reals.clone())
            .expect("descent preserves nonnegativity")
    }

    fn coords(&self) -> usize {
        2 * self.pairs.len() + self.reals.len()
    }

    fn coord_mut(&mut self, idx: usize) -> &mut Rational {
        let np = self.pairs.len();
        if idx < 2 * np {
            let (a, b) = &mut self.pairs[idx / 2];
            if idx % 2 == 0 {
                a
            } else {
                b
            }
        } else {
            &mut self.reals[idx - 2 * np]
        }
    }

    /// `e_0..e_n` in f64, mirroring the exact fold.
    fn esf_f64(&self) -> Vec<f64> {
        let n = 2 * self.pairs.len() + self.reals.len();
        let mut e = vec![0.0; n + 1];
        e[0] = 1.0;
        let mut len = 1usize;
        for (a, b) in &self.pairs {
            let af = a.to_f64().unwrap_or(f64::INFINITY);
            let bf = b.to_f64().unwrap_or(f64::INFINITY);
            let lin = 2.0 * af;
            let quad = af * af + bf * bf;
            len += 2;
            for i in (0..len - 2).rev() {
                let v = e[i];
                e[i + 2] += quad * v;
                e[i + 1] += lin * v;
            }
        }
        for mu in &self.reals {
            let mf = mu.to_f64().unwrap_or(f64::INFINITY);
            len += 1;
            for i in (0..len - 1).rev() {
                let v = e[i];
                e[i + 1] += mf * v;
            }
        }
        e
    }
}

fn objective(cand: &Candidate, indices: (usize, usize, usize, usize), constant: f64) -> f64 {
    let e = cand.esf_f64();
    let (a, b, c, d) = indices;
    let rhs = constant * e[c] * e[d];
    if !(rhs > 0.0) || !rhs.is_finite() {
        return f64::INFINITY;
    }
    let lhs = e[a] * e[b];
    if !lhs.is_finite() {
        return f64::INFINITY;
    }
    lhs / rhs
}

/// Exact ratio of the winner: `lhs/(C·rhs)` for rational constants, or
/// the square root of the exact squared ratio for the squared family.
/// `None` when the right-hand product vanishes.
fn exact_ratio(
    family: SearchFamily,
    seq_list: &SelfConjugateList,
    n: usize,
    k: usize,
    l: usize,
    indices: (usize, usize, usize, usize),
) -> Option<f64> {
    let seq = elem_sym_all(seq_list);
    let (a, b, c, d) = indices;
    let lhs = seq
        .product(&[a as isize, b as isize])
        .expect("search lists are never formal");
    let rhs = seq
        .product(&[c as isize, d as isize])
        .expect("search lists are never formal");
    if rhs.is_zero() {
        return None;
    }
    match family {
        SearchFamily::T14V => {
            let num = &lhs * &lhs * rat_int((k * (n - 2 * l)) as i64);
            let den = &rhs * &rhs * rat_int((l * (n - 2 * k)) as i64);
            Some((num / den).to_f64().unwrap_or(f64::INFINITY).sqrt())
        }
        SearchFamily::T14I => {
            let m = n / 2;
            let constant = Rational::new(((l + 1) * (m - k + 1)).into(), (k * (m - l)).into());
            Some((lhs / (constant * rhs)).to_f64().unwrap_or(f64::INFINITY))
        }
        SearchFamily::T14II => {
            let m = n.div_ceil(2);
            let constant = Rational::new(((l + 1) * (m - k)).into(), (k * (m - l - 1)).into());
            Some((lhs / (constant * rhs)).to_f64().unwrap_or(f64::INFINITY))
        }
        SearchFamily::T14III | SearchFamily::T14IV | SearchFamily::OddOddOdd => {
            Some((lhs / rhs).to_f64().unwrap_or(f64::INFINITY))
        }
    }
}

/// Dyadic annealing schedule for the multiplicative step: 1/2 down to
/// about 1e−4.
fn delta_schedule() -> Vec<Rational> {
    (1..=13)
        .map(|j| Rational::new(1.into(), (1i64 << j).into()))
        .collect()
}

/// Minimizes `e_a e_b / (C · e_c e_d)` over lists of length `n` by random
/// restarts plus coordinate-wise multiplicative descent. Deterministic
/// for fixed arguments. The returned ratio is recomputed exactly from the
/// witness, and for proven families a witness below 1 aborts loudly.
pub fn estimate_optimal_constant(
    family: SearchFamily,
    n: usize,
    k: usize,
    l: usize,
    h: usize,
    budget: u64,
    seed: u64,
) -> Result<SearchResult, SearchError> {
    let indices = instance_indices(family, n, k, l, h).ok_or(SearchError::InvalidIndices {
        family,
        n,
        k,
        l,
        h,
    })?;
    let h = match family {
        SearchFamily::T14I | SearchFamily::T14II => 2,
        SearchFamily::T14III | SearchFamily::T14IV | SearchFamily::T14V => 1,
        SearchFamily::OddOddOdd => h,
    };
    let budget = budget.max(1);
    let constant = constant_f64(family, n, k, l);
    let restarts = budget.div_euclid(2000).clamp(1, 32);
    let per_restart = budget / restarts;

    // Pair-rich starts: the squared family needs them, and the all-odd
    // probe collapses along imaginary directions only pairs provide.
    let prefer_pairs = matches!(family, SearchFamily::T14V | SearchFamily::OddOddOdd);
    let runs: Vec<(f64, Candidate, u64)> = (0..restarts)
        .into_par_iter()
        .map(|r| {
            let sub_seed = derive_seed(seed, r);
            descend(n, indices, constant, prefer_pairs, per_restart, sub_seed)
        })
        .collect();

    let mut iterations = 0u64;
    let mut best: Option<(f64, Candidate)> = None;
    let mut progress = Vec::with_capacity(runs.len());
    for (score, cand, iters) in runs {
        iterations += iters;
        let better = match &best {
            None => true,
            Some((s, c)) => {
                score < *s || (score == *s && cand.to_list().to_json() < c.to_list().to_json())
            }
        };
        if better {
            best = Some((score, cand));
        }
        progress.push(best.as_ref().expect("just set").0);
    }
    let (_, cand) = best.expect("at least one restart");
    let witness = cand.to_list();
    let best_ratio = exact_ratio(family, &witness, n, k, l, indices).unwrap_or(f64::INFINITY);

    if let Some(proven) = family.proven() {
        let seq = elem_sym_all(&witness);
        let report = check_t14(&seq, proven, k, l).expect("indices validated");
        if !report.holds {
            return Err(SearchError::Soundness {
                family,
                witness: witness.to_json(),
            });
        }
    }

    Ok(SearchResult {
        family,
        n,
        k,
        l,
        h,
        best_ratio,
        witness,
        iterations,
        budget,
        seed,
        progress,
    })
}

fn descend(
    n: usize,
    indices: (usize, usize, usize, usize),
    constant: f64,
    prefer_pairs: bool,
    step_budget: u64,
    seed: u64,
) -> (f64, Candidate, u64) {
    let profile = match seed % 2 {
        0 => Profile::UniformBox,
        _ => Profile::IntegerSmall,
    };
    let start = random_list(n, seed, profile, None);
    let mut cand = Candidate::from_list(&start);
    if prefer_pairs {
        // Re-pack into the maximal number of pairs.
        let m = n / 2;
        let mut pairs = cand.pairs.clone();
        while pairs.len() < m {
            pairs.push((rat_int(1), rat_int(1)));
        }
        pairs.truncate(m);
        let reals = if n % 2 == 1 {
            vec![rat_int(1)]
        } else {
            Vec::new()
        };
        cand = Candidate { pairs, reals };
    }
    // Strictly positive start: multiplicative moves keep zeros frozen, so
    // boundary extremals are approached rather than started from.
    // Clear zeros so every coordinate stays reachable.
    for i in 0..cand.coords() {
        if cand.coord_mut(i).is_zero() {
            *cand.coord_mut(i) = rat_int(1);
        }
    }

    let mut used = 0u64;
    let mut score = objective(&cand, indices, constant);
    used += 1;
    let schedule = delta_schedule();
    'outer: loop {
        let mut improved_any = false;
        for delta in &schedule {
            let down = rat_int(1) - delta;
            let up = rat_int(1) + delta;
            for idx in 0..cand.coords() {
                for factor in [&down, &up] {
                    if used >= step_budget {
                        break 'outer;
                    }
                    let old = cand.coord_mut(idx).clone();
                    *cand.coord_mut(idx) = &old * factor;
                    let trial = objective(&cand, indices, constant);
                    used += 1;
                    if trial < score {
                        score = trial;
                        improved_any = true;
                    } else {
                        *cand.coord_mut(idx) = old;
                    }
                }
            }
        }
        if !improved_any {
            break;
        }
    }
    (score, cand, used)
}

/// One stored witness line.
#[derive(Debug, Serialize, Deserialize)]
struct CorpusLine {
    key: String,
    list: serde_json::Value,
    ratio_decimal: f64,
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusStatus {
    Inserted,
    Replaced,
    Unchanged,
}

/// Appends or refreshes the witness for this result's key in the
/// JSON-lines corpus. Better (smaller) ratios replace prior entries;
/// identical entries are a no-op; a corrupt store is an explicit error,
/// never silently reset.
pub fn witness_corpus_update(
    result: &SearchResult,
    store: &Path,
) -> Result<CorpusStatus, SearchError> {
    let mut entries: BTreeMap<String, CorpusLine> = BTreeMap::new();
    if store.exists() {
        let raw = std::fs::read_to_string(store)?;
        for (i, line) in raw.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let parsed: CorpusLine =
                serde_json::from_str(line).map_err(|e| SearchError::CorpusCorrupt {
                    line: i + 1,
                    message: e.to_string(),
                })?;
            entries.insert(parsed.key.clone(), parsed);
        }
    }
    let key = result.key();
    let list_value: serde_json::Value =
        serde_json::from_str(&result.witness.to_json()).expect("list json is valid");
    let status = match entries.get(&key) {
        Some(existing) if existing.ratio_decimal <= result.best_ratio => CorpusStatus::Unchanged,
        Some(_) => CorpusStatus::Replaced,
        None => CorpusStatus::Inserted,
    };
    if status != CorpusStatus::Unchanged {
        entries.insert(
            key.clone(),
            CorpusLine {
                key,
                list: list_value,
                ratio_decimal: result.best_ratio,
                seed: result.seed,
            },
        );
        let mut out = String::new();
        for entry in entries.values() {
            writeln!(
                out,
                "{}",
                serde_json::to_string(entry).expect("corpus line")
            )
            .expect("string write");
        }
        std::fs::write(store, out)?;
    }
    Ok(status)
}
