//! Composite error balls.
//!
//! A substitution ball holds every valid sequence reachable from a center when
//! the rows suffer bit flips within the budget. A deletion ball holds the
//! channel outputs `(y0, y1)` after one deletion; a deletion always occurs, so
//! one row comes out one symbol shorter.

use alloc::collections::BTreeSet;
use alloc::string::String;
use core::fmt;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};

use crate::alphabet::{CompositeSeq, RowTuple};
use crate::arith::binom;
use crate::error::{err, Result};

/// Substitution budget: per channel or in total.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SubErrorSpec {
    PerChannel(Vec<usize>),
    Total(usize),
}

impl SubErrorSpec {
    /// Checks that a per-channel budget has one entry per row.
    pub fn check(&self, k: usize) -> Result<()> {
        if let SubErrorSpec::PerChannel(e) = self {
            if e.len() != k {
                return Err(err!(InvalidInput, "per-channel budget has {} entries, expected k = {k}", e.len()));
            }
        }
        Ok(())
    }

    /// The per-channel spec `(1,0,...,0)` of length `k`.
    pub fn first_channel(k: usize) -> Self {
        let mut e = vec![0; k];
        e[0] = 1;
        SubErrorSpec::PerChannel(e)
    }

    pub fn is_first_channel_single(&self) -> bool {
        matches!(self, SubErrorSpec::PerChannel(e) if e.first() == Some(&1) && e[1..].iter().all(|&x| x == 0))
    }

    pub fn total_budget(&self) -> usize {
        match self {
            SubErrorSpec::PerChannel(e) => e.iter().sum(),
            SubErrorSpec::Total(e) => *e,
        }
    }
}

/// Any error budget understood by the toolkit.
///
/// Text forms: `(e0,e1,...)` per channel, `t:e` total, `d:(1,0)` one deletion in
/// row 0 and `d:1` one deletion in either row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ErrorSpec {
    Sub(SubErrorSpec),
    Del(DelSpec),
}

impl ErrorSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(rest) = t.strip_prefix("d:") {
            return match rest {
                "(1,0)" => Ok(ErrorSpec::Del(DelSpec::Radius10)),
                "1" => Ok(ErrorSpec::Del(DelSpec::Radius1)),
                _ => Err(err!(InvalidInput, "deletion spec must be d:(1,0) or d:1, got {text:?}")),
            };
        }
        if let Some(rest) = t.strip_prefix("t:") {
            let e = rest.parse().map_err(|_| err!(InvalidInput, "cannot parse total budget in {text:?}"))?;
            return Ok(ErrorSpec::Sub(SubErrorSpec::Total(e)));
        }
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| err!(InvalidInput, "spec {text:?} is not (e0,e1,...), t:e, d:(1,0) or d:1"))?;
        let e = inner
            .split(',')
            .map(|x| x.parse::<usize>().map_err(|_| err!(InvalidInput, "cannot parse budget {x:?} in {text:?}")))
            .collect::<Result<Vec<_>>>()?;
        Ok(ErrorSpec::Sub(SubErrorSpec::PerChannel(e)))
    }
}

impl fmt::Display for ErrorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ErrorSpec::Sub(s) => write!(f, "{s}"),
            ErrorSpec::Del(DelSpec::Radius10) => f.write_str("d:(1,0)"),
            ErrorSpec::Del(DelSpec::Radius1) => f.write_str("d:1"),
        }
    }
}

impl fmt::Display for SubErrorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubErrorSpec::Total(e) => write!(f, "t:{e}"),
            SubErrorSpec::PerChannel(e) => {
                f.write_str("(")?;
                for (i, x) in e.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// How a ball size was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeMethod {
    /// Closed-form count; the label names the formula.
    Formula(&'static str),
    /// Brute-force enumeration of the ball.
    Enumerated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallSize {
    pub value: BigUint,
    pub method: SizeMethod,
}

/// Limits for brute-force ball enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCaps {
    /// Longest sequence enumerated under a total budget.
    pub max_len_total: usize,
    /// Longest sequence enumerated under a per-channel budget of at most two flips.
    pub max_len_per_channel: usize,
}

impl Default for EnumCaps {
    fn default() -> Self {
        Self { max_len_total: 8, max_len_per_channel: 10 }
    }
}

fn letter_counts(s: &CompositeSeq) -> Vec<usize> {
    let mut c = vec![0usize; s.k() + 1];
    for &x in s.letters() {
        c[x as usize] += 1;
    }
    c
}

/// Exact ball size, by closed form when one is known.
///
/// Falls back to enumeration under [`EnumCaps::default`] when `allow_enumeration`
/// is set, otherwise reports the combination as unsupported.
pub fn sub_ball_size(s: &CompositeSeq, spec: &SubErrorSpec, allow_enumeration: bool) -> Result<BallSize> {
    if s.has_unknown() {
        return Err(err!(InvalidInput, "ball center contains '?'"));
    }
    spec.check(s.k())?;
    if let Some(b) = closed_form_size(s, spec) {
        return Ok(b);
    }
    if !allow_enumeration {
        return Err(err!(Unsupported, "no closed form for spec {spec:?} at k = {}", s.k()));
    }
    let set = enumerate_sub_ball(s, spec, &EnumCaps::default())?;
    Ok(BallSize { value: BigUint::from(set.len()), method: SizeMethod::Enumerated })
}

fn closed_form_size(s: &CompositeSeq, spec: &SubErrorSpec) -> Option<BallSize> {
    let k = s.k();
    let n = s.len();
    let cnt = letter_counts(s);
    let formula = |v: BigUint, name| Some(BallSize { value: v, method: SizeMethod::Formula(name) });
    if spec.total_budget() == 0 {
        return formula(BigUint::one(), "zero budget");
    }
    match spec {
        SubErrorSpec::PerChannel(_) if spec.is_first_channel_single() => {
            // only letters k-1 and k can move: k-1 <-> k
            let m = cnt[k] + if k >= 1 { cnt[k - 1] } else { 0 };
            formula(BigUint::from(1 + m), "1 + m")
        }
        SubErrorSpec::Total(1) => {
            let m: usize = cnt[1..k].iter().sum();
            formula(BigUint::from(1 + n + m), "1 + n + m")
        }
        SubErrorSpec::PerChannel(e) if k == 2 && e[..] == [1, 1] => {
            let (j, m) = (cnt[0], cnt[1]);
            formula(BigUint::from(2 * n + 1 + m * (n - 1) + j * (n - m - j)), "(1,1) closed form")
        }
        SubErrorSpec::Total(2) if k == 2 => {
            let m = cnt[1];
            let v = (n * n + 3 * n + 2) / 2 + m * (n - 1) + m * (m.max(1) - 1) / 2;
            formula(BigUint::from(v), "total-2 closed form")
        }
        SubErrorSpec::Total(e) if k == 2 => formula(total_ball_k2(n, cnt[1], *e), "k=2 total triple sum"),
        SubErrorSpec::PerChannel(e) if k == 2 => {
            formula(per_channel_ball_k2(cnt[0], cnt[1], cnt[2], e[0], e[1]), "k=2 per-channel indicator sum")
        }
        _ => None,
    }
}

/// Ball size at `k = 2` under a total budget `e`, for a center of length `n` with `m` ones.
pub fn total_ball_k2(n: usize, m: usize, e: usize) -> BigUint {
    let mut acc = BigUint::zero();
    for i in 0..=e.min(m) {
        // i letters 1 -> 0 or 2, each one flip with two choices
        let a = binom(m, i) * Pow::pow(BigUint::from(2u32), i);
        let mut inner = BigUint::zero();
        for l in 0..=(e - i).min(n - m) {
            // l letters 0 or 2 -> 1, one flip each
            let mut swaps = BigUint::zero();
            for p in 0..=(e - i - l) / 2 {
                // p letters 0 <-> 2, two flips each
                swaps += binom(n - m - l, p);
            }
            inner += binom(n - m, l) * swaps;
        }
        acc += a * inner;
    }
    acc
}

/// Ball size at `k = 2` under per-channel budgets for a center with `j` zeros, `m` ones, `r` twos.
///
/// Transitions and the channels they touch (row 0, row 1):
/// `0->1` (0,1), `0->2` (1,1), `1->0` (0,1), `1->2` (1,0), `2->0` (1,1), `2->1` (1,0).
pub fn per_channel_ball_k2(j: usize, m: usize, r: usize, e0: usize, e1: usize) -> BigUint {
    let mut acc = BigUint::zero();
    // a: 0->1, b: 0->2, c: 1->0, d: 1->2, x: 2->0, y: 2->1
    for a in 0..=j {
        for b in 0..=j - a {
            for c in 0..=m {
                for d in 0..=m - c {
                    for x in 0..=r {
                        for y in 0..=r - x {
                            if b + d + x + y <= e0 && a + b + c + x <= e1 {
                                acc += binom(j, a) * binom(j - a, b) * binom(m, c) * binom(m - c, d) * binom(r, x) * binom(r - x, y);
                            }
                        }
                    }
                }
            }
        }
    }
    acc
}

/// Calls `f` on every subset of `0..n` of size at most `budget`, in lexicographic order.
fn for_each_subset(n: usize, budget: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, budget: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        f(cur);
        if budget == 0 {
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, budget - 1, cur, f);
            cur.pop();
        }
    }
    rec(0, n, budget, &mut Vec::new(), f);
}

/// Every row tuple reachable from `rows` under `spec`, including invalid ones.
pub fn flip_outcomes(rows: &RowTuple, spec: &SubErrorSpec) -> Vec<RowTuple> {
    let k = rows.k();
    let n = rows.len();
    let mut out = Vec::new();
    match spec {
        SubErrorSpec::Total(e) => {
            let base = rows.rows().to_vec();
            for_each_subset(k * n, *e, &mut |pos| {
                let mut r = base.clone();
                for &p in pos {
                    r[p / n][p % n] ^= 1;
                }
                out.push(RowTuple::new(r).expect("equal lengths"));
            });
        }
        SubErrorSpec::PerChannel(e) => {
            let mut cur = rows.rows().to_vec();
            per_channel_rec(0, e, n, &mut cur, &mut out);
        }
    }
    out
}

fn per_channel_rec(ch: usize, e: &[usize], n: usize, cur: &mut Vec<Vec<u8>>, out: &mut Vec<RowTuple>) {
    if ch == e.len() {
        out.push(RowTuple::new(cur.clone()).expect("equal lengths"));
        return;
    }
    let mut patterns = Vec::new();
    for_each_subset(n, e[ch], &mut |pos| patterns.push(pos.to_vec()));
    for pos in patterns {
        for &p in &pos {
            cur[ch][p] ^= 1;
        }
        per_channel_rec(ch + 1, e, n, cur, out);
        for &p in &pos {
            cur[ch][p] ^= 1;
        }
    }
}

/// Brute-force substitution ball: flip patterns within budget, reconstruct, drop '?'.
pub fn enumerate_sub_ball(s: &CompositeSeq, spec: &SubErrorSpec, caps: &EnumCaps) -> Result<BTreeSet<CompositeSeq>> {
    let rows = s.decompose()?;
    spec.check(s.k())?;
    let cap = match spec {
        SubErrorSpec::PerChannel(_) if spec.total_budget() <= 2 => caps.max_len_per_channel,
        _ => caps.max_len_total,
    };
    if s.len() > cap {
        return Err(err!(SizeLimit, "length {} exceeds enumeration cap {cap} for {spec:?}", s.len()));
    }
    Ok(flip_outcomes(&rows, spec)
        .into_iter()
        .filter_map(|r| r.reconstruct().ok().filter(|y| !y.has_unknown()))
        .collect())
}

/// Hamming distances between corresponding rows of two sequences of equal length and resolution.
pub fn row_distances(a: &CompositeSeq, b: &CompositeSeq) -> Vec<usize> {
    let k = a.k();
    let mut d = vec![0usize; k];
    for (&x, &y) in a.letters().iter().zip(b.letters()) {
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        // rows k-hi .. k-lo differ
        for r in k - hi as usize..k - lo as usize {
            d[r] += 1;
        }
    }
    d
}

/// Membership test `y in B(s)` straight from row distances.
pub fn in_sub_ball(s: &CompositeSeq, y: &CompositeSeq, spec: &SubErrorSpec) -> bool {
    let d = row_distances(s, y);
    match spec {
        SubErrorSpec::PerChannel(e) => d.iter().zip(e).all(|(a, b)| a <= b),
        SubErrorSpec::Total(e) => d.iter().sum::<usize>() <= *e,
    }
}

/// Deletion budget at resolution 2: one deletion in row 0, or in either row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DelSpec {
    Radius10,
    Radius1,
}

/// Channel output after a deletion: the two received rows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DelOutcome {
    pub y0: Vec<u8>,
    pub y1: Vec<u8>,
}

/// Number of maximal runs.
pub fn runs(x: &[u8]) -> Result<usize> {
    if x.is_empty() {
        return Err(err!(Domain, "runs of an empty sequence"));
    }
    Ok(1 + x.windows(2).filter(|w| w[0] != w[1]).count())
}

/// All distinct sequences obtained by deleting one symbol.
pub fn single_deletions(x: &[u8]) -> BTreeSet<Vec<u8>> {
    (0..x.len())
        .map(|i| {
            let mut y = x.to_vec();
            y.remove(i);
            y
        })
        .collect()
}

/// All distinct sequences obtained by inserting one symbol from `0..q`.
pub fn single_insertions(x: &[u8], q: u8) -> BTreeSet<Vec<u8>> {
    let mut out = BTreeSet::new();
    for i in 0..=x.len() {
        for a in 0..q {
            let mut y = x.to_vec();
            y.insert(i, a);
            out.insert(y);
        }
    }
    out
}

fn require_k2(s: &CompositeSeq) -> Result<()> {
    if s.k() != 2 {
        return Err(err!(Unsupported, "deletion balls need k = 2, got k = {}", s.k()));
    }
    if s.has_unknown() {
        return Err(err!(InvalidInput, "ball center contains '?'"));
    }
    if s.is_empty() {
        return Err(err!(Domain, "deletion ball of an empty sequence"));
    }
    Ok(())
}

/// `rho(s0)` or `rho(s0) + rho(s1)`.
pub fn del_ball_size(s: &CompositeSeq, spec: DelSpec) -> Result<usize> {
    require_k2(s)?;
    let r0 = runs(&s.row(0))?;
    Ok(match spec {
        DelSpec::Radius10 => r0,
        DelSpec::Radius1 => r0 + runs(&s.row(1))?,
    })
}

/// Explicit deletion ball.
pub fn enumerate_del_ball(s: &CompositeSeq, spec: DelSpec) -> Result<BTreeSet<DelOutcome>> {
    require_k2(s)?;
    let (s0, s1) = (s.row(0), s.row(1));
    let mut out: BTreeSet<DelOutcome> =
        single_deletions(&s0).into_iter().map(|y0| DelOutcome { y0, y1: s1.clone() }).collect();
    if spec == DelSpec::Radius1 {
        out.extend(single_deletions(&s1).into_iter().map(|y1| DelOutcome { y0: s0.clone(), y1 }));
    }
    Ok(out)
}

/// Centers whose row-0 deletion ball contains `(y0, s1)`.
pub fn del_in_ball_10(y0: &[u8], s1: &[u8]) -> Vec<CompositeSeq> {
    single_insertions(y0, 2)
        .into_iter()
        .filter(|s0| s0.len() == s1.len() && s0.iter().zip(s1).all(|(a, b)| a <= b))
        .map(|s0| CompositeSeq::from_raw(2, s0.iter().zip(s1).map(|(a, b)| a + b).collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn seq(k: usize, s: &str) -> CompositeSeq {
        CompositeSeq::parse(k, s).unwrap()
    }

    #[test]
    fn worked_sizes_at_length_thirty() {
        let zeros = CompositeSeq::zeros(2, 30).unwrap();
        let spec = SubErrorSpec::PerChannel(vec![1, 0]);
        assert_eq!(sub_ball_size(&zeros, &spec, false).unwrap().value, BigUint::from(1u32));
        let s = seq(2, &"012".repeat(10));
        assert_eq!(sub_ball_size(&s, &spec, false).unwrap().value, BigUint::from(21u32));
    }

    #[test]
    fn tiny_balls() {
        let caps = EnumCaps::default();
        let one = seq(2, "1");
        let all: BTreeSet<_> = ["0", "1", "2"].iter().map(|t| seq(2, t)).collect();
        assert_eq!(enumerate_sub_ball(&one, &SubErrorSpec::Total(2), &caps).unwrap(), all);
        assert_eq!(enumerate_sub_ball(&one, &SubErrorSpec::PerChannel(vec![1, 1]), &caps).unwrap(), all);
        assert_eq!(sub_ball_size(&one, &SubErrorSpec::PerChannel(vec![1, 1]), false).unwrap().value, BigUint::from(3u32));
        assert_eq!(sub_ball_size(&seq(2, "0"), &SubErrorSpec::Total(1), false).unwrap().value, BigUint::from(2u32));
        let s = seq(3, "0123");
        let zero = enumerate_sub_ball(&s, &SubErrorSpec::PerChannel(vec![0, 0, 0]), &caps).unwrap();
        assert_eq!(zero.into_iter().collect::<Vec<_>>(), vec![s]);
    }

    #[test]
    fn enumeration_respects_caps() {
        let s = CompositeSeq::zeros(2, 9).unwrap();
        assert!(matches!(
            enumerate_sub_ball(&s, &SubErrorSpec::Total(1), &EnumCaps::default()),
            Err(crate::Error::SizeLimit(_))
        ));
        assert!(enumerate_sub_ball(&s, &SubErrorSpec::PerChannel(vec![1, 1]), &EnumCaps::default()).is_ok());
    }

    #[test]
    fn fallback_is_labelled() {
        let s = seq(3, "0123");
        let spec = SubErrorSpec::PerChannel(vec![0, 1, 0]);
        assert!(sub_ball_size(&s, &spec, false).is_err());
        let b = sub_ball_size(&s, &spec, true).unwrap();
        assert_eq!(b.method, SizeMethod::Enumerated);
    }

    #[test]
    fn spec_strings() {
        for t in ["(1,0)", "(0,2,1)", "t:2", "d:(1,0)", "d:1"] {
            assert_eq!(ErrorSpec::parse(t).unwrap().to_string(), t);
        }
        assert_eq!(ErrorSpec::parse(" ( 1 , 1 ) ").unwrap(), ErrorSpec::Sub(SubErrorSpec::PerChannel(vec![1, 1])));
        assert!(ErrorSpec::parse("d:2").is_err());
        assert!(ErrorSpec::parse("1,0").is_err());
        assert!(ErrorSpec::parse("t:x").is_err());
    }

    #[test]
    fn run_counts() {
        let x: Vec<u8> = "001010010".bytes().map(|b| b - b'0').collect();
        assert_eq!(runs(&x).unwrap(), 7);
        assert_eq!(runs(&[0, 0, 0]).unwrap(), 1);
        assert_eq!(runs(&[0, 1, 0, 1]).unwrap(), 4);
        assert!(runs(&[]).is_err());
    }

    #[test]
    fn deletion_balls() {
        let z = CompositeSeq::zeros(2, 5).unwrap();
        assert_eq!(del_ball_size(&z, DelSpec::Radius10).unwrap(), 1);
        assert_eq!(del_ball_size(&z, DelSpec::Radius1).unwrap(), 2);
        let s = seq(2, "012");
        assert_eq!(del_ball_size(&s, DelSpec::Radius10).unwrap(), 2);
        assert_eq!(del_ball_size(&s, DelSpec::Radius1).unwrap(), 4);
        assert_eq!(enumerate_del_ball(&s, DelSpec::Radius1).unwrap().len(), 4);
        assert_eq!(del_ball_size(&seq(2, "2222"), DelSpec::Radius1).unwrap(), 2);
        assert!(del_ball_size(&seq(3, "012"), DelSpec::Radius1).is_err());
        let ball = enumerate_del_ball(&s, DelSpec::Radius10).unwrap();
        let y0s: Vec<_> = ball.iter().map(|o| crate::alphabet::row_string(&o.y0)).collect();
        assert_eq!(y0s, ["00", "01"]);
        assert_eq!(s.to_string(), "012");
    }

    #[test]
    fn row_distance_matches_decomposition() {
        let a = seq(4, "01234");
        let b = seq(4, "43210");
        let (ra, rb) = (a.decompose().unwrap(), b.decompose().unwrap());
        let direct: Vec<usize> = ra.rows().iter().zip(rb.rows()).map(|(x, y)| x.iter().zip(y).filter(|(p, q)| p != q).count()).collect();
        assert_eq!(row_distances(&a, &b), direct);
    }
}

#[cfg(test)]
mod agreement {
    use super::*;

    fn all_seqs(k: usize, n: usize) -> Vec<CompositeSeq> {
        let mut out = vec![CompositeSeq::from_raw(k, Vec::new())];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|s| {
                    (0..=k as u8).map(move |c| {
                        let mut l = s.letters().to_vec();
                        l.push(c);
                        CompositeSeq::from_raw(k, l)
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn formulas_match_enumeration_small() {
        let caps = EnumCaps::default();
        let mut specs = vec![SubErrorSpec::Total(1), SubErrorSpec::Total(2), SubErrorSpec::Total(3)];
        for e0 in 0..=3 {
            for e1 in 0..=3 - e0 {
                specs.push(SubErrorSpec::PerChannel(vec![e0, e1]));
            }
        }
        for n in 1..=4 {
            for s in all_seqs(2, n) {
                for spec in &specs {
                    let b = sub_ball_size(&s, spec, false).unwrap();
                    let set = enumerate_sub_ball(&s, spec, &caps).unwrap();
                    assert_eq!(b.value, BigUint::from(set.len()), "{s} {spec:?}");
                    assert!(set.iter().all(|y| in_sub_ball(&s, y, spec)));
                }
            }
        }
        for k in 1..=4 {
            for n in 1..=3 {
                for s in all_seqs(k, n) {
                    for spec in [SubErrorSpec::first_channel(k), SubErrorSpec::Total(1)] {
                        let b = sub_ball_size(&s, &spec, false).unwrap();
                        assert_eq!(b.value, BigUint::from(enumerate_sub_ball(&s, &spec, &caps).unwrap().len()));
                    }
                }
            }
        }
    }
}
