//! Exhaustive generation of partitions, overpartitions and the unimodal
//! families, with their rank statistics.
//!
//! This is the slow, trusted side of every generating-function check. Objects
//! are produced by a per-size grammar (choose the peak, then for each smaller
//! size how many plain and overlined copies go left and right of it) and every
//! statistic is recomputed from the finished object, never from the grammar
//! choices.
//!
//! Ordering convention: within one side of the peak, the overlined copy of a
//! value is the copy nearest the peak. Partitions and overpartitions are
//! listed in non-increasing order with the overlined copy last in its block.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Largest size accepted by the enumerators.
pub const SIZE_LIMIT: u32 = 60;

/// Ordered parts with overline flags and a designated peak position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnimodalObject {
    pub parts: Vec<u32>,
    pub overlined: Vec<bool>,
    pub peak: usize,
}

impl UnimodalObject {
    pub fn plain(parts: Vec<u32>, peak: usize) -> Self {
        let overlined = vec![false; parts.len()];
        UnimodalObject { parts, overlined, peak }
    }

    /// Parses a display string such as `"1' 2 2' 2"` with `peak`, where a
    /// trailing `'` marks an overlined part.
    pub fn parse(s: &str, peak: usize) -> Result<Self> {
        let mut parts = Vec::new();
        let mut overlined = Vec::new();
        for tok in s.split_whitespace() {
            let (digits, over) = match tok.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (tok, false),
            };
            parts.push(digits.parse().map_err(|_| Error::Domain(format!("bad part {tok:?}")))?);
            overlined.push(over);
        }
        Ok(UnimodalObject { parts, overlined, peak })
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "parts": self.parts,
            "overlined": self.overlined,
            "peak": self.peak,
        })
    }
}

impl fmt::Display for UnimodalObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (p, o)) in self.parts.iter().zip(&self.overlined).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}{}", if *o { "'" } else { "" })?;
        }
        write!(f, ")")
    }
}

/// The combinatorial families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    /// Partitions; the statistic is constant 0.
    Partition,
    /// Partitions with Dyson's rank.
    PartitionWithRank,
    /// Overpartitions with Dyson's rank.
    Overpartition,
    StronglyUnimodal,
    /// Signed family counted by `ū(m,n)`.
    LeftHeavyOverlined,
    /// Family counted by `ū2(m,n)`.
    M2LeftHeavyOverlined,
    /// Family counted by `u2(m,n)`.
    M2LeftHeavy,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 7] = [
        Self::Partition,
        Self::PartitionWithRank,
        Self::Overpartition,
        Self::StronglyUnimodal,
        Self::LeftHeavyOverlined,
        Self::M2LeftHeavyOverlined,
        Self::M2LeftHeavy,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Partition => "partition",
            Self::PartitionWithRank => "partition-with-rank",
            Self::Overpartition => "overpartition",
            Self::StronglyUnimodal => "strongly-unimodal",
            Self::LeftHeavyOverlined => "left-heavy-overlined",
            Self::M2LeftHeavyOverlined => "m2-left-heavy-overlined",
            Self::M2LeftHeavy => "m2-left-heavy",
        }
    }

    fn alias(&self) -> &'static str {
        match self {
            Self::Partition => "p",
            Self::PartitionWithRank => "r",
            Self::Overpartition => "rbar",
            Self::StronglyUnimodal => "u",
            Self::LeftHeavyOverlined => "ubar",
            Self::M2LeftHeavyOverlined => "u2bar",
            Self::M2LeftHeavy => "u2",
        }
    }

    fn is_unimodal(&self) -> bool {
        !matches!(self, Self::Partition | Self::PartitionWithRank | Self::Overpartition)
    }

    /// `+1`, or `(-1)^{#plain parts}` for the left-heavy overlined family.
    pub fn sign(&self, obj: &UnimodalObject) -> i64 {
        match self {
            Self::LeftHeavyOverlined => {
                if obj.overlined.iter().filter(|o| !**o).count() % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
            _ => 1,
        }
    }

    /// The rank statistic, computed from the object alone.
    pub fn rank(&self, obj: &UnimodalObject) -> i64 {
        let after_minus_before = |keep: &dyn Fn(usize) -> bool| -> i64 {
            let before = (0..obj.peak).filter(|&i| keep(i)).count() as i64;
            let after = (obj.peak + 1..obj.len()).filter(|&i| keep(i)).count() as i64;
            after - before
        };
        match self {
            Self::Partition => 0,
            Self::PartitionWithRank | Self::Overpartition => obj.largest() as i64 - obj.len() as i64,
            Self::StronglyUnimodal => after_minus_before(&|_| true),
            Self::LeftHeavyOverlined => after_minus_before(&|i| obj.overlined[i]),
            Self::M2LeftHeavyOverlined => after_minus_before(&|i| obj.overlined[i] && obj.parts[i].is_multiple_of(2)),
            Self::M2LeftHeavy => after_minus_before(&|i| obj.parts[i].is_multiple_of(2)),
        }
    }

    /// Family membership, checked directly against the definition.
    pub fn validate(&self, obj: &UnimodalObject) -> bool {
        if obj.parts.len() != obj.overlined.len() || obj.parts.contains(&0) {
            return false;
        }
        match self {
            Self::Partition | Self::PartitionWithRank => {
                obj.peak == 0 && !obj.overlined.iter().any(|&o| o) && is_nonincreasing(&obj.parts)
            }
            Self::Overpartition => obj.peak == 0 && is_nonincreasing(&obj.parts) && overlines_end_blocks(obj),
            Self::StronglyUnimodal => validate_strongly_unimodal(obj),
            Self::LeftHeavyOverlined => validate_left_heavy(obj),
            Self::M2LeftHeavyOverlined => validate_m2_overlined(obj),
            Self::M2LeftHeavy => validate_m2(obj),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|f| f.name() == s || f.alias() == s)
            .ok_or_else(|| Error::Domain(format!("unknown family {s:?}")))
    }
}

fn is_nonincreasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

fn is_nondecreasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

/// Each value block of a non-increasing list has at most one overlined copy,
/// and it is the last copy.
fn overlines_end_blocks(obj: &UnimodalObject) -> bool {
    (0..obj.len()).all(|i| {
        !obj.overlined[i] || obj.parts.get(i + 1) != Some(&obj.parts[i])
    })
}

/// On each side of the peak, every value has at most one overlined copy and
/// it is the copy nearest the peak.
fn overlines_nearest_peak(obj: &UnimodalObject) -> bool {
    let p = obj.peak;
    (0..p).all(|i| !obj.overlined[i] || (i + 1 == p || obj.parts[i + 1] != obj.parts[i]))
        && (p + 1..obj.len()).all(|i| !obj.overlined[i] || (i == p + 1 || obj.parts[i - 1] != obj.parts[i]))
}

fn sides(obj: &UnimodalObject) -> Option<(&[u32], u32, &[u32])> {
    if obj.peak >= obj.len() {
        return None;
    }
    Some((&obj.parts[..obj.peak], obj.parts[obj.peak], &obj.parts[obj.peak + 1..]))
}

fn validate_strongly_unimodal(obj: &UnimodalObject) -> bool {
    let Some((left, top, right)) = sides(obj) else { return false };
    !obj.overlined.iter().any(|&o| o)
        && left.windows(2).all(|w| w[0] < w[1])
        && left.last().is_none_or(|&l| l < top)
        && right.first().is_none_or(|&r| r < top)
        && right.windows(2).all(|w| w[0] > w[1])
}

fn validate_left_heavy(obj: &UnimodalObject) -> bool {
    let Some((left, top, right)) = sides(obj) else { return false };
    let p = obj.peak;
    // up to and including the peak: an overpartition with largest part overlined
    obj.overlined[p]
        && is_nondecreasing(&obj.parts[..=p])
        && overlines_nearest_peak(obj)
        && left.iter().all(|&l| l <= top)
        && (0..p).all(|i| !obj.overlined[i] || obj.parts[i] < top)
        // after the peak: distinct overlined parts below the peak
        && right.iter().all(|&r| r < top)
        && right.windows(2).all(|w| w[0] > w[1])
        && obj.overlined[p + 1..].iter().all(|&o| o)
}

fn validate_m2_overlined(obj: &UnimodalObject) -> bool {
    let Some((left, top, right)) = sides(obj) else { return false };
    let p = obj.peak;
    if top % 2 != 0 || !obj.overlined[p] {
        return false;
    }
    let n = top / 2;
    let others = (0..obj.len()).filter(|&i| i != p);
    let mut plain_left: Vec<u32> = Vec::new();
    let mut plain_right: Vec<u32> = Vec::new();
    for i in others {
        let (v, o) = (obj.parts[i], obj.overlined[i]);
        if v > top || (v == top && o) {
            return false;
        }
        if o && v % 2 == 1 && i > p {
            return false;
        }
        if !o {
            if v < n + 1 {
                return false;
            }
            if i < p {
                plain_left.push(v);
            } else {
                plain_right.push(v);
            }
        }
    }
    plain_left.sort_unstable();
    plain_right.sort_unstable();
    is_nondecreasing(left) && is_nonincreasing(right) && overlines_nearest_peak(obj) && plain_left == plain_right
}

fn validate_m2(obj: &UnimodalObject) -> bool {
    let Some((left, top, right)) = sides(obj) else { return false };
    if obj.overlined.iter().any(|&o| o) || top % 2 != 0 {
        return false;
    }
    let evens_left: Vec<u32> = left.iter().copied().filter(|v| v % 2 == 0).collect();
    let evens_right: Vec<u32> = right.iter().copied().filter(|v| v % 2 == 0).collect();
    is_nondecreasing(left)
        && left.iter().all(|&v| v <= top)
        && right.iter().all(|&v| v % 2 == 0 && v < top)
        && right.windows(2).all(|w| w[0] > w[1])
        && evens_left.windows(2).all(|w| w[0] < w[1])
        && evens_left.last().is_none_or(|&v| v < top)
        && evens_right.len() == right.len()
}

fn guard(n: u32) -> Result<()> {
    if n > SIZE_LIMIT {
        return Err(Error::SizeLimit { n: n as usize, limit: SIZE_LIMIT as usize });
    }
    Ok(())
}

/// Copies of one value placed on each side of the peak.
#[derive(Clone, Copy, Debug, Default)]
struct Level {
    left_plain: u32,
    left_over: bool,
    right_plain: u32,
    right_over: bool,
}

impl Level {
    fn cost(&self, k: u32) -> u32 {
        k * (self.left_plain + self.right_plain + self.left_over as u32 + self.right_over as u32)
    }
}

/// The grammar: admissible [`Level`]s for value `k` under peak `top`, with
/// total size at most `budget`. `k == top` describes extra copies of the
/// peak value besides the peak itself.
fn level_choices(family: FamilyTag, top: u32, k: u32, budget: u32, out: &mut Vec<Level>) {
    out.clear();
    let flags = [false, true];
    match family {
        FamilyTag::StronglyUnimodal => {
            if k == top {
                out.push(Level::default());
                return;
            }
            for l in 0..=1 {
                for r in 0..=1 {
                    out.push(Level { left_plain: l, right_plain: r, ..Level::default() });
                }
            }
        }
        FamilyTag::LeftHeavyOverlined => {
            let max_plain = budget / k;
            if k == top {
                for m in 0..=max_plain {
                    out.push(Level { left_plain: m, ..Level::default() });
                }
                return;
            }
            for lo in flags {
                for ro in flags {
                    for m in 0..=max_plain {
                        out.push(Level { left_plain: m, left_over: lo, right_over: ro, right_plain: 0 });
                    }
                }
            }
        }
        FamilyTag::M2LeftHeavyOverlined => {
            let n = top / 2;
            let max_pairs = if k > n { budget / (2 * k) } else { 0 };
            let (lo_opts, ro_opts): (&[bool], &[bool]) = if k == top {
                (&flags[..1], &flags[..1])
            } else if k % 2 == 1 {
                (&flags[..], &flags[..1])
            } else {
                (&flags[..], &flags[..])
            };
            for &lo in lo_opts {
                for &ro in ro_opts {
                    for m in 0..=max_pairs {
                        out.push(Level { left_plain: m, right_plain: m, left_over: lo, right_over: ro });
                    }
                }
            }
        }
        FamilyTag::M2LeftHeavy => {
            if k == top {
                out.push(Level::default());
            } else if k % 2 == 1 {
                for m in 0..=budget / k {
                    out.push(Level { left_plain: m, ..Level::default() });
                }
            } else {
                for l in 0..=1 {
                    for r in 0..=1 {
                        out.push(Level { left_plain: l, right_plain: r, ..Level::default() });
                    }
                }
            }
        }
        _ => unreachable!("partition families use their own generator"),
    }
    out.retain(|lv| lv.cost(k) <= budget);
}

fn peak_overlined(family: FamilyTag) -> bool {
    matches!(family, FamilyTag::LeftHeavyOverlined | FamilyTag::M2LeftHeavyOverlined)
}

fn admissible_peak(family: FamilyTag, top: u32) -> bool {
    match family {
        FamilyTag::M2LeftHeavyOverlined | FamilyTag::M2LeftHeavy => top.is_multiple_of(2),
        _ => true,
    }
}

fn assemble(family: FamilyTag, top: u32, levels: &[Level]) -> UnimodalObject {
    // levels[i] describes value top - i
    let mut parts = Vec::new();
    let mut over = Vec::new();
    for (i, lv) in levels.iter().enumerate().rev() {
        let k = top - i as u32;
        for _ in 0..lv.left_plain {
            parts.push(k);
            over.push(false);
        }
        if lv.left_over {
            parts.push(k);
            over.push(true);
        }
    }
    let peak = parts.len();
    parts.push(top);
    over.push(peak_overlined(family));
    for (i, lv) in levels.iter().enumerate() {
        let k = top - i as u32;
        if lv.right_over {
            parts.push(k);
            over.push(true);
        }
        for _ in 0..lv.right_plain {
            parts.push(k);
            over.push(false);
        }
    }
    UnimodalObject { parts, overlined: over, peak }
}

fn unimodal_with_peak(family: FamilyTag, n: u32, top: u32, f: &mut dyn FnMut(&UnimodalObject)) {
    fn go(
        family: FamilyTag,
        top: u32,
        k: u32,
        budget: u32,
        levels: &mut Vec<Level>,
        f: &mut dyn FnMut(&UnimodalObject),
    ) {
        if k == 0 {
            if budget == 0 {
                f(&assemble(family, top, levels));
            }
            return;
        }
        let mut choices = Vec::new();
        level_choices(family, top, k, budget, &mut choices);
        for lv in choices {
            levels.push(lv);
            go(family, top, k - 1, budget - lv.cost(k), levels, f);
            levels.pop();
        }
    }
    if top == 0 || top > n || !admissible_peak(family, top) {
        return;
    }
    go(family, top, top, n - top, &mut Vec::new(), f);
}

fn partitions_with_max(n: u32, max: u32, over: bool, prefix: &mut UnimodalObject, f: &mut dyn FnMut(&UnimodalObject)) {
    if n == 0 {
        f(prefix);
        return;
    }
    for k in (1..=max.min(n)).rev() {
        // a block of m copies of k, optionally overlining the last one
        for m in 1..=n / k {
            for o in if over { &[false, true][..] } else { &[false][..] } {
                for j in 0..m {
                    prefix.parts.push(k);
                    prefix.overlined.push(*o && j + 1 == m);
                }
                partitions_with_max(n - m * k, k - 1, over, prefix, f);
                for _ in 0..m {
                    prefix.parts.pop();
                    prefix.overlined.pop();
                }
            }
        }
    }
}

/// Streams every object of size `n` in `family` to `f`.
pub fn for_each(family: FamilyTag, n: u32, f: &mut dyn FnMut(&UnimodalObject)) -> Result<()> {
    guard(n)?;
    if family.is_unimodal() {
        for top in 1..=n {
            unimodal_with_peak(family, n, top, f);
        }
    } else {
        let mut prefix = UnimodalObject::plain(Vec::new(), 0);
        partitions_with_max(n, n, family == FamilyTag::Overpartition, &mut prefix, f);
    }
    Ok(())
}

/// All objects of size `n` in `family`.
pub fn enumerate(family: FamilyTag, n: u32) -> Result<Vec<UnimodalObject>> {
    let mut out = Vec::new();
    for_each(family, n, &mut |o| out.push(o.clone()))?;
    Ok(out)
}

/// Signed count of the objects of size `n`.
pub fn count(family: FamilyTag, n: u32) -> Result<i64> {
    Ok(count_by_rank(family, n)?.values().sum())
}

/// Signed counts by rank; unimodal families are split across threads by peak.
pub fn count_by_rank(family: FamilyTag, n: u32) -> Result<BTreeMap<i64, i64>> {
    guard(n)?;
    let tally = |objs: &mut dyn FnMut(&mut dyn FnMut(&UnimodalObject))| {
        let mut map = BTreeMap::new();
        objs(&mut |o: &UnimodalObject| {
            debug_assert!(family.validate(o), "{family}: invalid {o}");
            *map.entry(family.rank(o)).or_insert(0) += family.sign(o);
        });
        map
    };
    let mut map = if family.is_unimodal() {
        (1..=n)
            .into_par_iter()
            .map(|top| tally(&mut |f| unimodal_with_peak(family, n, top, f)))
            .reduce(BTreeMap::new, merge)
    } else {
        tally(&mut |f| {
            let mut prefix = UnimodalObject::plain(Vec::new(), 0);
            partitions_with_max(n, n, family == FamilyTag::Overpartition, &mut prefix, f)
        })
    };
    map.retain(|_, v| *v != 0);
    Ok(map)
}

fn merge(mut a: BTreeMap<i64, i64>, b: BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// `count_by_rank` for every size `0..=max_n`, computed in parallel.
pub fn count_table(family: FamilyTag, max_n: u32) -> Result<Vec<BTreeMap<i64, i64>>> {
    guard(max_n)?;
    (0..=max_n).into_par_iter().map(|n| count_by_rank(family, n)).collect()
}

/// `N(m,n)`, the number of partitions of `n` with rank `m`.
pub fn partition_rank_count(m: i64, n: u32) -> Result<i64> {
    Ok(count_by_rank(FamilyTag::PartitionWithRank, n)?.get(&m).copied().unwrap_or(0))
}

/// `u(m,n)`, the number of strongly unimodal sequences of `n` with rank `m`.
pub fn strongly_unimodal_rank_count(m: i64, n: u32) -> Result<i64> {
    Ok(count_by_rank(FamilyTag::StronglyUnimodal, n)?.get(&m).copied().unwrap_or(0))
}

/// M₂-rank of an overpartition: `⌈ℓ/2⌉ - #parts + #(plain odd parts)`, minus
/// one when the largest part `ℓ` is odd and not overlined.
pub fn overpartition_m2_rank(obj: &UnimodalObject) -> i64 {
    let Some(&l) = obj.parts.first() else { return 0 };
    let plain_odd = obj.parts.iter().zip(&obj.overlined).filter(|(p, o)| *p % 2 == 1 && !**o).count() as i64;
    let l_overlined = obj.parts.iter().zip(&obj.overlined).any(|(p, o)| *p == l && *o);
    let chi = (l % 2 == 1 && !l_overlined) as i64;
    (l as i64 + 1) / 2 - obj.len() as i64 + plain_odd - chi
}

/// M₂-rank of a partition without repeated odd parts: `⌈ℓ/2⌉ - #parts`.
pub fn odd_distinct_m2_rank(obj: &UnimodalObject) -> i64 {
    let l = obj.largest() as i64;
    (l + 1) / 2 - obj.len() as i64
}

/// Overpartitions of `n` by M₂-rank.
pub fn overpartition_m2_rank_counts(n: u32) -> Result<BTreeMap<i64, i64>> {
    let mut map = BTreeMap::new();
    for_each(FamilyTag::Overpartition, n, &mut |o| *map.entry(overpartition_m2_rank(o)).or_insert(0) += 1)?;
    Ok(map)
}

/// Partitions of `n` without repeated odd parts, by M₂-rank.
pub fn odd_distinct_m2_rank_counts(n: u32) -> Result<BTreeMap<i64, i64>> {
    let mut map = BTreeMap::new();
    for_each(FamilyTag::Partition, n, &mut |o| {
        let repeated_odd = o.parts.windows(2).any(|w| w[0] == w[1] && w[0] % 2 == 1);
        if !repeated_odd {
            *map.entry(odd_distinct_m2_rank(o)).or_insert(0) += 1;
        }
    })?;
    Ok(map)
}

/// Every candidate object of size `n`: all compositions, overline patterns
/// and peak positions. Exponential; used to check the generators.
pub fn brute_force(family: FamilyTag, n: u32) -> Vec<UnimodalObject> {
    let mut out = Vec::new();
    if n == 0 {
        let empty = UnimodalObject::plain(Vec::new(), 0);
        if family.validate(&empty) {
            out.push(empty);
        }
        return out;
    }
    for mask in 0u64..(1u64 << (n - 1)) {
        let mut parts = Vec::new();
        let mut run = 1;
        for i in 0..n - 1 {
            if mask >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        let len = parts.len();
        for over in 0u64..(1u64 << len) {
            let overlined: Vec<bool> = (0..len).map(|i| over >> i & 1 == 1).collect();
            for peak in 0..len {
                let obj = UnimodalObject { parts: parts.clone(), overlined: overlined.clone(), peak };
                if family.validate(&obj) {
                    out.push(obj);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn obj(s: &str, peak: usize) -> UnimodalObject {
        UnimodalObject::parse(s, peak).unwrap()
    }

    #[test]
    fn left_heavy_of_three() {
        let got: BTreeSet<_> = enumerate(FamilyTag::LeftHeavyOverlined, 3).unwrap().into_iter().collect();
        let want: BTreeSet<_> =
            [obj("3'", 0), obj("1 2'", 1), obj("1' 2'", 1), obj("2' 1'", 0), obj("1 1 1'", 2)].into_iter().collect();
        assert_eq!(got, want);
        assert_eq!(count(FamilyTag::LeftHeavyOverlined, 3).unwrap(), 3);
        let ranks: Vec<i64> = ["3'", "1 2'", "1' 2'", "2' 1'", "1 1 1'"]
            .iter()
            .zip([0, 1, 1, 0, 2])
            .map(|(s, p)| FamilyTag::LeftHeavyOverlined.rank(&obj(s, p)))
            .collect();
        assert_eq!(ranks, vec![0, 0, -1, 1, 0]);
    }

    #[test]
    fn m2_overlined_of_seven() {
        let got = enumerate(FamilyTag::M2LeftHeavyOverlined, 7).unwrap();
        assert_eq!(got.len(), 5);
        assert!(got.contains(&obj("1' 2 2' 2", 2)));
        let by_rank = count_by_rank(FamilyTag::M2LeftHeavyOverlined, 7).unwrap();
        assert_eq!(by_rank, BTreeMap::from([(-1, 1), (0, 3), (1, 1)]));
    }

    #[test]
    fn m2_of_six() {
        let got: BTreeSet<_> = enumerate(FamilyTag::M2LeftHeavy, 6).unwrap().into_iter().collect();
        let want: BTreeSet<_> =
            [obj("6", 0), obj("2 4", 1), obj("4 2", 0), obj("1 1 4", 2), obj("1 1 1 1 2", 4)].into_iter().collect();
        assert_eq!(got, want);
        assert_eq!(count_by_rank(FamilyTag::M2LeftHeavy, 6).unwrap(), BTreeMap::from([(-1, 1), (0, 3), (1, 1)]));
    }

    #[test]
    fn size_zero_conventions() {
        assert_eq!(count(FamilyTag::M2LeftHeavyOverlined, 0).unwrap(), 0);
        assert_eq!(count(FamilyTag::StronglyUnimodal, 0).unwrap(), 0);
        assert_eq!(count(FamilyTag::Partition, 0).unwrap(), 1);
    }

    #[test]
    fn generators_match_brute_force() {
        for family in FamilyTag::ALL {
            for n in 0..=8 {
                let mut got = enumerate(family, n).unwrap();
                let len = got.len();
                got.sort();
                got.dedup();
                assert_eq!(got.len(), len, "{family} n={n}: duplicates");
                let mut want = brute_force(family, n);
                want.sort();
                assert_eq!(got, want, "{family} n={n}");
            }
        }
    }

    #[test]
    fn rank_of_partitions_of_four() {
        assert_eq!(partition_rank_count(0, 4).unwrap(), 1);
        let ranks = count_by_rank(FamilyTag::PartitionWithRank, 4).unwrap();
        assert_eq!(ranks, BTreeMap::from([(-3, 1), (-1, 1), (0, 1), (1, 1), (3, 1)]));
    }

    #[test]
    fn partition_ranks_are_symmetric() {
        for n in 0..=30 {
            let m = count_by_rank(FamilyTag::PartitionWithRank, n).unwrap();
            for (r, c) in &m {
                assert_eq!(m.get(&-r), Some(c), "n={n}");
            }
        }
    }

    #[test]
    fn size_guard() {
        assert_eq!(enumerate(FamilyTag::Partition, 61).unwrap_err(), Error::SizeLimit { n: 61, limit: 60 });
    }

    #[test]
    fn family_names_parse() {
        for f in FamilyTag::ALL {
            assert_eq!(f.name().parse::<FamilyTag>().unwrap(), f);
        }
        assert_eq!("ubar".parse::<FamilyTag>().unwrap(), FamilyTag::LeftHeavyOverlined);
    }
}
