//! Brute-force ground truth for small instances.
//!
//! Codes are independent sets of the conflict graph whose vertices are the
//! sequences and whose edges join centers with intersecting error balls. The
//! exact search is a colour-bounded branch and bound; the reported witness is
//! the lexicographically least optimum.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::alphabet::{all_binary, all_sequences, CompositeSeq};
use crate::arith::{rat, Rational};
use crate::balls::{
    enumerate_del_ball, enumerate_sub_ball, flip_outcomes, runs, single_deletions, DelSpec, EnumCaps, ErrorSpec,
    SubErrorSpec,
};
use crate::error::{err, Result};
use crate::substitution::{BinaryCode, InnerCodes};

/// Search limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    /// Largest vertex count for exact search.
    pub max_vertices: usize,
    /// Longest binary code searched for a single error. Length 8 is accepted
    /// when raised but may not finish in practical time.
    pub max_binary_len: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self { max_vertices: 1024, max_binary_len: 7 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn first(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn minus(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn and(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

/// Graph on sequence indices joining centers whose balls intersect.
#[derive(Debug, Clone)]
pub struct ConflictGraph {
    n: usize,
    adj: Vec<BitSet>,
}

impl ConflictGraph {
    /// Vertex `i` and `j` conflict when `balls[i]` and `balls[j]` share an element.
    pub fn from_balls<T: Ord>(balls: &[BTreeSet<T>]) -> Self {
        let n = balls.len();
        let mut owners: BTreeMap<&T, Vec<usize>> = BTreeMap::new();
        for (i, b) in balls.iter().enumerate() {
            for y in b {
                owners.entry(y).or_default().push(i);
            }
        }
        let mut g = Self { n, adj: vec![BitSet::new(n); n] };
        for group in owners.values() {
            for &a in group {
                for &b in group {
                    if a != b {
                        g.adj[a].insert(b);
                    }
                }
            }
        }
        g
    }

    /// Graph from an explicit edge predicate.
    pub fn from_fn(n: usize, edge: impl Fn(usize, usize) -> bool) -> Self {
        let mut g = Self { n, adj: vec![BitSet::new(n); n] };
        for a in 0..n {
            for b in a + 1..n {
                if edge(a, b) {
                    g.adj[a].insert(b);
                    g.adj[b].insert(a);
                }
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adj[a].iter().count()
    }

    /// True when no two listed vertices are adjacent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| !self.adjacent(a, b)))
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                for v in self.adj[comp[i]].iter() {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Maximum independent set, lexicographically least among all maximum ones.
    ///
    /// The optimum size comes from the colour search; a depth-first pass in
    /// vertex order, trying inclusion first, then stops at the first set of
    /// that size.
    pub fn max_independent_set(&self) -> Vec<usize> {
        let mut out = Vec::new();
        // per-component optima combine into the overall lexicographically least optimum
        for comp in self.components() {
            let target = ColourSearch::new(self, &comp).run().len();
            let mut cands = BitSet::new(self.n);
            for &v in &comp {
                cands.insert(v);
            }
            let mut cur = Vec::new();
            let found = self.first_of_size(cands, &mut cur, target);
            debug_assert!(found);
            out.extend(cur);
        }
        out.sort_unstable();
        out
    }

    fn first_of_size(&self, cands: BitSet, cur: &mut Vec<usize>, target: usize) -> bool {
        if cur.len() == target {
            return true;
        }
        let Some(v) = cands.first() else {
            return false;
        };
        if cur.len() + self.clique_cover(&cands) < target {
            return false;
        }
        cur.push(v);
        let mut rest = cands.minus(&self.adj[v]);
        rest.remove(v);
        if self.first_of_size(rest, cur, target) {
            return true;
        }
        cur.pop();
        let mut rest = cands;
        rest.remove(v);
        self.first_of_size(rest, cur, target)
    }

    /// Greedy partition of `cands` into cliques; an upper bound on any independent subset.
    fn clique_cover(&self, cands: &BitSet) -> usize {
        let mut cliques: Vec<BitSet> = Vec::new();
        for v in cands.iter() {
            match cliques.iter_mut().find(|c| c.contains(v)) {
                Some(c) => *c = c.and(&self.adj[v]),
                None => cliques.push(self.adj[v].clone()),
            }
        }
        cliques.len()
    }

    /// Size of a maximum independent set.
    pub fn independence_number(&self) -> usize {
        self.maximum_within(&BitSet::full(self.n)).len()
    }

    /// Some maximum independent set inside `allowed`, sorted.
    fn maximum_within(&self, allowed: &BitSet) -> Vec<usize> {
        let verts: Vec<usize> = allowed.iter().collect();
        let mut found = ColourSearch::new(self, &verts).run();
        found.sort_unstable();
        found
    }

    /// Lexicographic greedy independent set.
    pub fn greedy_independent_set(&self) -> Vec<usize> {
        let mut cands = BitSet::full(self.n);
        let mut out = Vec::new();
        while let Some(v) = cands.first() {
            out.push(v);
            cands = cands.minus(&self.adj[v]);
            cands.remove(v);
        }
        out
    }
}

/// Exact maximum independent set on an induced subgraph.
///
/// Vertices are relabelled by increasing conflict degree. Each node colours
/// its candidates into cliques and branches in reverse colour order, pruning
/// when the number of colours left cannot beat the incumbent.
struct ColourSearch {
    labels: Vec<usize>,
    words: usize,
    adj: Vec<u64>,
    best: Vec<usize>,
}

impl ColourSearch {
    fn new(g: &ConflictGraph, verts: &[usize]) -> Self {
        let mut order: Vec<usize> = verts.to_vec();
        let deg = |v: usize| verts.iter().filter(|&&u| g.adjacent(u, v)).count();
        order.sort_by_key(|&v| (deg(v), v));
        let n = order.len();
        let words = n.div_ceil(64).max(1);
        let mut adj = vec![0u64; n * words];
        for i in 0..n {
            for j in 0..n {
                if i != j && g.adjacent(order[i], order[j]) {
                    adj[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        Self { labels: order, words, adj, best: Vec::new() }
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.labels.len();
        let mut cands = vec![0u64; self.words];
        for i in 0..n {
            cands[i / 64] |= 1 << (i % 64);
        }
        self.expand(&mut Vec::new(), cands);
        self.best.iter().map(|&i| self.labels[i]).collect()
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    fn expand(&mut self, cur: &mut Vec<usize>, mut cands: Vec<u64>) {
        let w = self.words;
        let mut order: Vec<(usize, usize)> = Vec::new();
        let mut pool = cands.clone();
        let mut class = vec![0u64; w];
        let mut colour = 0;
        while pool.iter().any(|&x| x != 0) {
            colour += 1;
            class.copy_from_slice(&pool);
            while let Some(v) = first_bit(&class) {
                let row = self.row(v);
                for i in 0..w {
                    class[i] &= row[i];
                }
                pool[v / 64] &= !(1 << (v % 64));
                order.push((v, colour));
            }
        }
        let mut rest = vec![0u64; w];
        for &(v, c) in order.iter().rev() {
            if cur.len() + c <= self.best.len() {
                return;
            }
            let row = self.row(v);
            for i in 0..w {
                rest[i] = cands[i] & !row[i];
            }
            rest[v / 64] &= !(1 << (v % 64));
            cur.push(v);
            if rest.iter().all(|&x| x == 0) {
                if cur.len() > self.best.len() {
                    self.best.clone_from(cur);
                }
            } else {
                self.expand(cur, rest.clone());
            }
            cur.pop();
            cands[v / 64] &= !(1 << (v % 64));
        }
    }
}

fn first_bit(set: &[u64]) -> Option<usize> {
    set.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Balls around every sequence of `{0..=k}^n`, in lexicographic order of centers.
pub fn conflict_graph(n: usize, k: usize, spec: &ErrorSpec) -> Result<(Vec<CompositeSeq>, ConflictGraph)> {
    let centers: Vec<CompositeSeq> = all_sequences(k, n).collect();
    let caps = EnumCaps { max_len_total: n, max_len_per_channel: n };
    let g = match spec {
        ErrorSpec::Sub(s) => {
            s.check(k)?;
            let balls = centers.iter().map(|c| enumerate_sub_ball(c, s, &caps)).collect::<Result<Vec<_>>>()?;
            ConflictGraph::from_balls(&balls)
        }
        ErrorSpec::Del(d) => {
            let balls = centers.iter().map(|c| enumerate_del_ball(c, *d)).collect::<Result<Vec<_>>>()?;
            ConflictGraph::from_balls(&balls)
        }
    };
    Ok((centers, g))
}

fn space_size(n: usize, k: usize) -> Option<usize> {
    (k + 1).checked_pow(n as u32)
}

/// Largest code for `spec` and the lexicographically least code of that size.
pub fn optimal_code_size(n: usize, k: usize, spec: &ErrorSpec, caps: &OracleCaps) -> Result<(usize, Vec<CompositeSeq>)> {
    match space_size(n, k) {
        Some(v) if v <= caps.max_vertices => {}
        _ => return Err(err!(SizeLimit, "(k+1)^n exceeds the vertex cap {}", caps.max_vertices)),
    }
    let (centers, g) = conflict_graph(n, k, spec)?;
    let best = g.max_independent_set();
    Ok((best.len(), best.into_iter().map(|i| centers[i].clone()).collect()))
}

/// True when the balls around distinct codewords are pairwise disjoint.
pub fn is_code(code: &[CompositeSeq], spec: &ErrorSpec) -> Result<bool> {
    let n = code.first().map_or(0, CompositeSeq::len);
    let caps = EnumCaps { max_len_total: n, max_len_per_channel: n };
    let mut seen = BTreeSet::new();
    for c in code {
        let ok = match spec {
            ErrorSpec::Sub(s) => enumerate_sub_ball(c, s, &caps)?.into_iter().all(|y| seen.insert(y.into_letters())),
            ErrorSpec::Del(d) => enumerate_del_ball(c, *d)?.into_iter().all(|o| {
                let mut key = o.y0;
                key.push(u8::MAX);
                key.extend(o.y1);
                seen.insert(key)
            }),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Greedy code; a lower bound only.
pub fn greedy_code(n: usize, k: usize, spec: &ErrorSpec) -> Result<Vec<CompositeSeq>> {
    let (centers, g) = conflict_graph(n, k, spec)?;
    Ok(g.greedy_independent_set().into_iter().map(|i| centers[i].clone()).collect())
}

/// Largest binary code of length `len` with minimum distance 3.
///
/// The distance graph is invariant under translation and coordinate
/// permutation, so an optimum may be taken to hold the zero word and, as its
/// lightest other word, `1^w 0^(len-w)` for some `w >= 3`.
pub fn optimal_binary_single_error(len: usize, caps: &OracleCaps) -> Result<BinaryCode> {
    if len > caps.max_binary_len {
        return Err(err!(SizeLimit, "length {len} exceeds the cap {}", caps.max_binary_len));
    }
    let words: Vec<Vec<u8>> = all_binary(len).collect();
    let g = ConflictGraph::from_fn(words.len(), |a, b| (a ^ b).count_ones() <= 2);
    let weight = |i: usize| weight_of(&words[i]);
    let mut best = vec![0];
    for w in 3..=len {
        let lead = words.iter().position(|x| x.iter().take(w).all(|&b| b == 1) && weight_of(x) == w).unwrap();
        let mut allowed = BitSet::new(words.len());
        for i in (0..words.len()).filter(|&i| weight(i) >= w && i != lead) {
            if !g.adjacent(i, 0) && !g.adjacent(i, lead) {
                allowed.insert(i);
            }
        }
        let mut found = g.maximum_within(&allowed);
        if found.len() + 2 > best.len() {
            found.extend([0, lead]);
            found.sort_unstable();
            best = found;
        }
    }
    BinaryCode::codebook(len, 1, best.into_iter().map(|i| words[i].clone()).collect())
}

fn weight_of(x: &[u8]) -> usize {
    x.iter().filter(|&&b| b == 1).count()
}

/// Optimal single-error inner codes for every length up to `n`.
pub fn optimal_inner_codes(n: usize, caps: &OracleCaps) -> Result<InnerCodes> {
    InnerCodes::new((0..=n).map(|l| optimal_binary_single_error(l, caps)).collect::<Result<Vec<_>>>()?)
}

/// Channel behaviours a decoder is checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ErrorUniverse {
    NoErrors,
    /// Every flip pattern within the budget.
    Substitutions(SubErrorSpec),
    /// Every single deletion in row 0, or in either row.
    Deletions(DelSpec),
}

impl ErrorUniverse {
    /// Received row tuples for a transmitted sequence.
    pub fn outcomes(&self, sent: &CompositeSeq) -> Result<Vec<Vec<Vec<u8>>>> {
        let rows = sent.decompose()?;
        Ok(match self {
            ErrorUniverse::NoErrors => vec![rows.into_rows()],
            ErrorUniverse::Substitutions(spec) => {
                spec.check(sent.k())?;
                flip_outcomes(&rows, spec).into_iter().map(|r| r.into_rows()).collect()
            }
            ErrorUniverse::Deletions(d) => {
                if sent.k() != 2 {
                    return Err(err!(Unsupported, "deletion universes need k = 2"));
                }
                let r = rows.into_rows();
                let mut out: Vec<_> = single_deletions(&r[0]).into_iter().map(|y0| vec![y0, r[1].clone()]).collect();
                if *d == DelSpec::Radius1 {
                    out.extend(single_deletions(&r[1]).into_iter().map(|y1| vec![r[0].clone(), y1]));
                }
                out
            }
        })
    }
}

/// One failed decode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailureCase {
    pub expected: CompositeSeq,
    pub received: Vec<Vec<u8>>,
    /// Decoder output or its error message.
    pub got: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DecodeReport {
    pub codewords: usize,
    pub outcomes: usize,
    pub failures: Vec<FailureCase>,
}

impl DecodeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `decode` on every outcome of every `(expected, sent)` pair.
pub fn exhaustive_decode_check<I, F>(cases: I, universe: &ErrorUniverse, decode: F) -> Result<DecodeReport>
where
    I: IntoIterator<Item = (CompositeSeq, CompositeSeq)>,
    F: Fn(&[Vec<u8>]) -> Result<CompositeSeq>,
{
    let mut report = DecodeReport::default();
    for (expected, sent) in cases {
        report.codewords += 1;
        for received in universe.outcomes(&sent)? {
            report.outcomes += 1;
            match decode(&received) {
                Ok(got) if got == expected => {}
                other => report.failures.push(FailureCase {
                    expected: expected.clone(),
                    received,
                    got: match other {
                        Ok(s) => s.to_string(),
                        Err(e) => e.to_string(),
                    },
                }),
            }
        }
    }
    Ok(report)
}

/// Vertex weights tested as fractional transversals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightRule {
    /// Weight one everywhere.
    Unit,
    /// `1/(1+m)`, `m` the number of letters `k-1` or `k`.
    FirstChannel,
    /// `1/(n+m)`, `m` the number of letters strictly between 0 and `k`.
    TotalOne,
    /// `1/(m(n-1) + (j+1)(n-m-j+1))` at `k = 2`, `j` zeros and `m` ones.
    PairOneOne,
    /// `2/((n+m)^2 - n - 7m + 12)` at `k = 2`, `m >= 2` ones; for `m < 2`
    /// the reciprocal of the ball around a sequence with no ones.
    TotalTwo,
    /// `1 / min |B(s)|` over centers `s` whose ball holds the vertex.
    Exact,
    /// `1/rho(y0)` on row-0 deletion outcomes.
    DeletionRuns,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalReport {
    pub valid: bool,
    /// Smallest weight sum over a ball.
    pub min_sum: Rational,
    /// Sum of all vertex weights.
    pub total_weight: Rational,
    /// Vertex weights in increasing vertex order.
    pub weights: Vec<Rational>,
}

fn sub_weight(rule: WeightRule, x: &CompositeSeq) -> Result<Rational> {
    let (n, k) = (x.len(), x.k());
    let count = |f: &dyn Fn(u8) -> bool| x.letters().iter().filter(|&&c| f(c)).count();
    let need_k2 = || if k == 2 { Ok(()) } else { Err(err!(Unsupported, "rule {rule:?} needs k = 2")) };
    Ok(match rule {
        WeightRule::Unit => Rational::one(),
        WeightRule::FirstChannel => rat(1, 1 + count(&|c| c as usize + 1 >= k) as i64),
        WeightRule::TotalOne => rat(1, (n + count(&|c| c > 0 && (c as usize) < k)) as i64),
        WeightRule::PairOneOne => {
            need_k2()?;
            let (j, m) = (count(&|c| c == 0), count(&|c| c == 1));
            rat(1, (m * (n - 1) + (j + 1) * (n - m - j + 1)) as i64)
        }
        WeightRule::TotalTwo => {
            need_k2()?;
            // smallest ball reachable has two fewer ones, and never fewer than none
            let m = count(&|c| c == 1).saturating_sub(2) as i64;
            let n = n as i64;
            rat(2, n * n + 3 * n + 2 + 2 * m * (n - 1) + m * m - m)
        }
        WeightRule::Exact | WeightRule::DeletionRuns => unreachable!("handled by the caller"),
    })
}

/// Checks that every ball carries total weight at least one.
pub fn check_fractional_transversal(
    n: usize,
    k: usize,
    spec: &ErrorSpec,
    rule: WeightRule,
    caps: &OracleCaps,
) -> Result<TransversalReport> {
    match space_size(n, k) {
        Some(v) if v <= caps.max_vertices => {}
        _ => return Err(err!(SizeLimit, "(k+1)^n exceeds the vertex cap {}", caps.max_vertices)),
    }
    let centers: Vec<CompositeSeq> = all_sequences(k, n).collect();
    match spec {
        ErrorSpec::Sub(s) => {
            if rule == WeightRule::DeletionRuns {
                return Err(err!(Unsupported, "run weights apply to deletion balls"));
            }
            s.check(k)?;
            let ecaps = EnumCaps { max_len_total: n, max_len_per_channel: n };
            let balls = centers.iter().map(|c| enumerate_sub_ball(c, s, &ecaps)).collect::<Result<Vec<_>>>()?;
            let weights: BTreeMap<&CompositeSeq, Rational> = if rule == WeightRule::Exact {
                let mut smallest: BTreeMap<&CompositeSeq, usize> = BTreeMap::new();
                for b in &balls {
                    for y in b {
                        let e = smallest.entry(y).or_insert(usize::MAX);
                        *e = (*e).min(b.len());
                    }
                }
                smallest.into_iter().map(|(y, m)| (y, rat(1, m as i64))).collect()
            } else {
                centers.iter().map(|c| Ok((c, sub_weight(rule, c)?))).collect::<Result<_>>()?
            };
            let sums: Vec<Rational> = balls.iter().map(|b| b.iter().map(|y| weights[y].clone()).sum()).collect();
            Ok(summarize(sums.into_iter(), weights.into_values()))
        }
        ErrorSpec::Del(d) => {
            if k != 2 {
                return Err(err!(Unsupported, "deletion balls need k = 2"));
            }
            let balls = centers.iter().map(|c| enumerate_del_ball(c, *d)).collect::<Result<Vec<_>>>()?;
            let mut vertices = BTreeSet::new();
            for b in &balls {
                vertices.extend(b.iter());
            }
            let weight = |o: &crate::balls::DelOutcome| -> Result<Rational> {
                match rule {
                    WeightRule::Unit => Ok(Rational::one()),
                    WeightRule::DeletionRuns if *d == DelSpec::Radius10 => Ok(rat(1, runs(&o.y0)? as i64)),
                    _ => Err(err!(Unsupported, "rule {rule:?} does not apply to {spec}")),
                }
            };
            let weights: BTreeMap<_, _> = vertices.into_iter().map(|o| Ok((o, weight(o)?))).collect::<Result<_>>()?;
            let sums: Vec<Rational> = balls.iter().map(|b| b.iter().map(|o| weights[o].clone()).sum()).collect();
            Ok(summarize(sums.into_iter(), weights.into_values()))
        }
    }
}

fn summarize(sums: impl Iterator<Item = Rational>, weights: impl Iterator<Item = Rational>) -> TransversalReport {
    let min_sum = sums.min().unwrap_or_else(Rational::zero);
    let weights: Vec<Rational> = weights.collect();
    TransversalReport { valid: min_sum >= Rational::one(), min_sum, total_weight: weights.iter().sum(), weights }
}

/// Letters on which two sequences differ, counting `'?'` as a difference.
pub fn letter_distance(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Nearest codeword by letter distance, lowest index on ties.
pub fn nearest_codeword(code: &[CompositeSeq], y: &CompositeSeq) -> Result<CompositeSeq> {
    code.iter()
        .min_by_key(|c| letter_distance(c.letters(), y.letters()))
        .cloned()
        .ok_or_else(|| err!(InvalidInput, "empty code"))
}

/// Minimum pairwise letter distance of a code.
pub fn minimum_distance(code: &[CompositeSeq]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, a) in code.iter().enumerate() {
        for b in &code[i + 1..] {
            let d = letter_distance(a.letters(), b.letters());
            best = Some(best.map_or(d, |x| x.min(d)));
        }
    }
    best
}
