//! Parity of `u2(n)` and the norm form `N² - 6J²` of ℤ[√6].
//!
//! Three independent routes to the parity of `u2(n)`:
//!
//! * the generating function `U2(1;-q)` reduced mod 2 (or the equivalent double
//!   sum),
//! * half the number of `(N, J)` with `N ≡ 2 (mod 4)`, `J` odd,
//!   `-N/3 < J ≤ N/3` and `N² - 6J² = 16n - 2`,
//! * the shape of the factorization of `8n - 1`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gf::rank::{self, ZetaPair};
use crate::ring::Mod2;
use crate::series::Series;

/// Largest `n` accepted by the factorization-based predicate.
pub const MAX_N: u64 = 1_000_000;

/// `U2(1;-q) mod 2` via `Σ_{n≥0, 0≤j≤n} (1 + q^{2j+1}) q^{3n²+6n-2j²-3j+2}`.
pub fn u2_mod2_series(order: usize) -> Series<Mod2> {
    let top = order as i64;
    let mut s = Series::zero(order);
    for n in (0..).take_while(|n| n * n + 3 * n + 2 <= top) {
        for j in 0..=n {
            let e = 3 * n * n + 6 * n - 2 * j * j - 3 * j + 2;
            for k in [e, e + 2 * j + 1] {
                if k <= top {
                    s.add_at(k as usize, &Mod2(true));
                }
            }
        }
    }
    s
}

/// `U2(1;-q) mod 2` from the defining q-series, computed over ℤ/2.
pub fn u2_mod2_from_definition(order: usize) -> Result<Series<Mod2>> {
    let one = ZetaPair { z: Mod2(true), zinv: Mod2(true) };
    // q ↦ -q is the identity mod 2
    rank::m2_left_heavy(&one, order)
}

/// An `(N, J)` pair counted by [`rep_count`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormFormSolution {
    pub n: i64,
    pub j: i64,
}

impl NormFormSolution {
    pub fn new(n: i64, j: i64) -> Result<Self> {
        if n < 3 || n.rem_euclid(4) != 2 || j.rem_euclid(2) != 1 || 3 * j <= -n || 3 * j > n {
            return Err(Error::Domain(format!("({n}, {j}) violates N ≥ 3, N ≡ 2 (mod 4), J odd, -N/3 < J ≤ N/3")));
        }
        Ok(NormFormSolution { n, j })
    }

    pub fn norm(&self) -> i64 {
        self.n * self.n - 6 * self.j * self.j
    }
}

/// Integer square root.
fn isqrt(m: u64) -> u64 {
    let mut r = (m as f64).sqrt() as u64;
    while r * r > m {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= m {
        r += 1;
    }
    r
}

/// Every `(u, v)` with `u > 0`, `-u/3 < v ≤ u/3` and `u² - 6v² = m`.
///
/// On that domain `u² - 6v² ≥ u²/3`, so `u ≤ √(3m)` bounds the search.
pub fn fundamental_solutions(m: i64) -> Result<Vec<(i64, i64)>> {
    if m <= 0 {
        return Err(Error::Domain(format!("norm {m} must be positive")));
    }
    let mut out = Vec::new();
    for u in 1..=isqrt(3 * m as u64) as i64 + 1 {
        let rest = u * u - m;
        if rest < 0 || rest % 6 != 0 {
            continue;
        }
        let v = isqrt((rest / 6) as u64) as i64;
        if 6 * v * v != rest {
            continue;
        }
        for v in if v == 0 { vec![0] } else { vec![v, -v] } {
            if -u < 3 * v && 3 * v <= u {
                out.push((u, v));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The pairs counted by [`rep_count`].
pub fn norm_form_solutions(m: i64) -> Result<Vec<NormFormSolution>> {
    Ok(fundamental_solutions(m)?
        .into_iter()
        .filter_map(|(u, v)| NormFormSolution::new(u, v).ok())
        .collect())
}

/// Number of `(N, J)` with `N ≥ 3`, `N ≡ 2 (mod 4)`, `J` odd,
/// `-N/3 < J ≤ N/3` and `N² - 6J² = m`.
pub fn rep_count(m: i64) -> Result<u64> {
    Ok(norm_form_solutions(m)?.len() as u64)
}

/// [`rep_count`] for every `m ≤ max_m` in one pass over the domain.
pub fn rep_count_table(max_m: i64) -> Vec<u64> {
    let mut t = vec![0u64; max_m.max(0) as usize + 1];
    let n_max = isqrt(3 * max_m.max(0) as u64) as i64 + 1;
    for n in (6..=n_max).step_by(4) {
        for j in (-n..=n).filter(|j| j.rem_euclid(2) == 1 && -n < 3 * j && 3 * j <= n) {
            let m = n * n - 6 * j * j;
            if m <= max_m {
                t[m as usize] += 1;
            }
        }
    }
    t
}

/// Primes up to `limit` by the sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut k = i * i;
            while k <= n {
                composite[k] = true;
                k += i;
            }
        }
    }
    out
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// A positive integer with its prime factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredInteger {
    value: u64,
    factors: BTreeMap<u64, u32>,
}

impl FactoredInteger {
    /// Factors `value` by trial division over a sieve up to `√value`.
    pub fn new(value: u64) -> Result<Self> {
        if value == 0 {
            return Err(Error::Domain("0 has no factorization".into()));
        }
        Ok(Self::with_primes(value, &primes_up_to(isqrt(value))))
    }

    /// Factors `value` using a precomputed list that covers `√value`.
    pub fn with_primes(value: u64, primes: &[u64]) -> Self {
        let mut factors = BTreeMap::new();
        let mut rest = value;
        for &p in primes {
            if p * p > rest {
                break;
            }
            while rest.is_multiple_of(p) {
                *factors.entry(p).or_insert(0) += 1;
                rest /= p;
            }
        }
        if rest > 1 {
            *factors.entry(rest).or_insert(0) += 1;
        }
        FactoredInteger { value, factors }
    }

    /// Accepts a claimed factorization after checking every key is prime
    /// and the product is `value`.
    pub fn from_factors(value: u64, factors: BTreeMap<u64, u32>) -> Result<Self> {
        if let Some(&p) = factors.keys().find(|&&p| !is_prime(p)) {
            return Err(Error::Factorization(format!("{p} is not prime")));
        }
        let mut product: u64 = 1;
        for (&p, &e) in &factors {
            product = p
                .checked_pow(e)
                .and_then(|x| product.checked_mul(x))
                .ok_or_else(|| Error::Factorization("product overflows".into()))?;
        }
        if product != value || factors.values().any(|&e| e == 0) {
            return Err(Error::Factorization(format!("factors multiply to {product}, not {value}")));
        }
        Ok(FactoredInteger { value, factors })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.factors.iter().map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") }).collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Number of ideals of ℤ[√6] of norm `m` whose generators have positive norm.
///
/// With `m = 2^a 3^b Π p^e Π r^f Π s^g`, `p ≡ ±7, ±11`, `r ≡ 1, 19`,
/// `s ≡ 5, 23 (mod 24)`: zero if some `e` is odd or `a + Σ g` is odd,
/// otherwise `Π (f + 1) Π (g + 1)`.
pub fn ideal_count(f: &FactoredInteger) -> u64 {
    let mut count = 1;
    let mut sign_parity = f.exponent(2);
    for (&p, &e) in f.factors() {
        match p % 24 {
            _ if p == 2 || p == 3 => {}
            7 | 17 | 11 | 13 => {
                if e % 2 == 1 {
                    return 0;
                }
            }
            1 | 19 => count *= e as u64 + 1,
            5 | 23 => {
                count *= e as u64 + 1;
                sign_parity += e;
            }
            r => unreachable!("prime {p} has residue {r} mod 24"),
        }
    }
    if sign_parity % 2 == 1 {
        0
    } else {
        count
    }
}

/// True iff `8n - 1 = 3^b ℓ² p^c` with a prime `p ≡ 5, 23 (mod 24)`, `p ∤ ℓ`
/// and `c ≡ 1 (mod 4)`.
pub fn is_odd_predicate(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if n > MAX_N {
        return Err(Error::Guard(format!("n = {n} exceeds the factorization cap {MAX_N}")));
    }
    Ok(predicate_of(&FactoredInteger::new(8 * n - 1)?))
}

fn predicate_of(f: &FactoredInteger) -> bool {
    let odd: Vec<(u64, u32)> = f.factors().iter().filter(|(&p, &e)| p != 3 && e % 2 == 1).map(|(&p, &e)| (p, e)).collect();
    match odd.as_slice() {
        [(p, c)] => matches!(p % 24, 5 | 23) && c % 4 == 1,
        _ => false,
    }
}

/// One row of the parity scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityRow {
    pub n: u64,
    /// `u2(n) mod 2` from the series.
    pub series: bool,
    /// `rep_count(16n - 2)/2 mod 2`.
    pub norm_form: bool,
    /// [`is_odd_predicate`].
    pub predicate: bool,
}

impl ParityRow {
    pub fn agree(&self) -> bool {
        self.series == self.norm_form && self.norm_form == self.predicate
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "u2_mod2": self.series as u8,
            "rep_half_mod2": self.norm_form as u8,
            "predicate": self.predicate,
            "agree": self.agree(),
        })
    }
}

/// Computes the three parities for `1 ≤ n ≤ max_n`.
///
/// Fails if some `rep_count(16n - 2)` is odd, since the halving would then
/// not be integral.
pub fn parity_scan(max_n: u64) -> Result<Vec<ParityRow>> {
    if max_n > MAX_N {
        return Err(Error::Guard(format!("max n {max_n} exceeds {MAX_N}")));
    }
    let series = u2_mod2_series(max_n as usize);
    let reps = rep_count_table(16 * max_n as i64);
    let primes = primes_up_to(isqrt(8 * max_n) + 1);
    (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let r = reps[(16 * n - 2) as usize];
            if r % 2 == 1 {
                return Err(Error::Domain(format!("rep_count({}) = {r} is odd", 16 * n - 2)));
            }
            Ok(ParityRow {
                n,
                series: series.coefficient(n as usize)?.0,
                norm_form: (r / 2) % 2 == 1,
                predicate: predicate_of(&FactoredInteger::with_primes(8 * n - 1, &primes)),
            })
        })
        .collect()
}

/// First `N ≤ n_max` and `J` in the fundamental range where
/// `N² - 6J² ≡ 6 (mod 8)` and `(N ≡ 2 (mod 4) and J odd)` disagree.
pub fn norm_residue_mismatch(n_max: i64) -> Option<(i64, i64)> {
    (1..=n_max).find_map(|n| {
        (-n..=n).filter(|j| -n < 3 * j && 3 * j <= n).find_map(|j| {
            let residue = (n * n - 6 * j * j).rem_euclid(8) == 6;
            let shape = n.rem_euclid(4) == 2 && j.rem_euclid(2) == 1;
            (residue != shape).then_some((n, j))
        })
    })
}
