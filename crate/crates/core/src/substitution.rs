//! Codes against substitutions.
//!
//! * Per-channel product code: every row lies in its own binary code.
//! * Fiber code: one flip in row 0. Letters `k-1` and `k` carry a binary
//!   word that is protected by an inner single-error-correcting code.
//! * Limited-magnitude code: one flip in an unknown row, realized by the
//!   checksum `sum (i+1) x[i] = a mod (2n+1)`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::alphabet::{all_binary, all_sequences, column_letter, CompositeSeq, RowTuple, UNKNOWN};
use crate::arith::{binom, ceil_log, pow};
use crate::error::{err, Result};

/// Which family a binary code belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BinaryCodeKind {
    /// Every word; corrects nothing.
    Trivial,
    /// Words with parity-check syndrome `a`; corrects one flip.
    HammingCoset(usize),
    /// An explicit list of words, decoded to the nearest word.
    Codebook(Vec<Vec<u8>>),
}

/// A binary code of fixed length with a decoder for up to `e` flips.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    len: usize,
    e: usize,
    kind: BinaryCodeKind,
}

/// Largest explicit codebook length.
pub const MAX_CODEBOOK_LEN: usize = 12;

impl BinaryCode {
    pub fn trivial(len: usize) -> Self {
        Self { len, e: 0, kind: BinaryCodeKind::Trivial }
    }

    /// Shortened Hamming coset: syndrome is the XOR of the 1-based positions of the ones.
    pub fn hamming_coset(len: usize, a: usize) -> Result<Self> {
        let r = ceil_log(2, len + 1);
        if a >= 1 << r {
            return Err(err!(Domain, "syndrome {a} needs more than {r} bits"));
        }
        Ok(Self { len, e: 1, kind: BinaryCodeKind::HammingCoset(a) })
    }

    /// Explicit codebook correcting `e` flips; words are deduplicated and sorted.
    pub fn codebook(len: usize, e: usize, mut words: Vec<Vec<u8>>) -> Result<Self> {
        if len > MAX_CODEBOOK_LEN {
            return Err(err!(SizeLimit, "codebook length {len} exceeds {MAX_CODEBOOK_LEN}"));
        }
        if words.is_empty() {
            return Err(err!(InvalidInput, "codebook is empty"));
        }
        if let Some(w) = words.iter().find(|w| w.len() != len || w.iter().any(|&b| b > 1)) {
            return Err(err!(InvalidInput, "codebook word {w:?} is not a binary word of length {len}"));
        }
        words.sort();
        words.dedup();
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                if hamming(a, b) <= 2 * e {
                    return Err(err!(InvalidInput, "codebook words {a:?} and {b:?} are too close for e = {e}"));
                }
            }
        }
        Ok(Self { len, e, kind: BinaryCodeKind::Codebook(words) })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of flips the decoder is guaranteed to correct.
    pub fn capability(&self) -> usize {
        self.e
    }

    pub fn kind(&self) -> &BinaryCodeKind {
        &self.kind
    }

    pub fn descriptor(&self) -> String {
        match &self.kind {
            BinaryCodeKind::Trivial => "trivial_e0".into(),
            BinaryCodeKind::HammingCoset(a) => alloc::format!("hamming_coset({a})"),
            BinaryCodeKind::Codebook(_) => "explicit_codebook".into(),
        }
    }

    pub fn contains(&self, w: &[u8]) -> bool {
        if w.len() != self.len {
            return false;
        }
        match &self.kind {
            BinaryCodeKind::Trivial => true,
            BinaryCodeKind::HammingCoset(a) => syndrome(w) == *a,
            BinaryCodeKind::Codebook(words) => words.binary_search_by(|x| x.as_slice().cmp(w)).is_ok(),
        }
    }

    /// Number of codewords.
    pub fn size(&self) -> BigUint {
        match &self.kind {
            BinaryCodeKind::Trivial => pow(2, self.len),
            BinaryCodeKind::HammingCoset(_) => {
                // every syndrome value below 2^r is reachable, so cosets have equal size
                pow(2, self.len - ceil_log(2, self.len + 1))
            }
            BinaryCodeKind::Codebook(words) => BigUint::from(words.len()),
        }
    }

    /// All codewords in lexicographic order.
    pub fn words(&self) -> Vec<Vec<u8>> {
        match &self.kind {
            BinaryCodeKind::Codebook(words) => words.clone(),
            _ => all_binary(self.len).filter(|w| self.contains(w)).collect(),
        }
    }

    /// Corrects up to `e` flips.
    pub fn decode(&self, y: &[u8]) -> Result<Vec<u8>> {
        if y.len() != self.len {
            return Err(err!(Dimension, "word of length {} for code of length {}", y.len(), self.len));
        }
        match &self.kind {
            BinaryCodeKind::Trivial => Ok(y.to_vec()),
            BinaryCodeKind::HammingCoset(a) => {
                let s = syndrome(y) ^ a;
                let mut x = y.to_vec();
                if s == 0 {
                    return Ok(x);
                }
                if s > self.len {
                    return Err(err!(DecodeFailure, "syndrome {s} points outside the word"));
                }
                x[s - 1] ^= 1;
                Ok(x)
            }
            BinaryCodeKind::Codebook(words) => {
                // ties go to the lexicographically smallest word
                let best = words.iter().min_by_key(|w| hamming(w, y)).expect("nonempty codebook");
                if hamming(best, y) > self.e {
                    return Err(err!(DecodeFailure, "no codeword within distance {}", self.e));
                }
                Ok(best.clone())
            }
        }
    }
}

fn syndrome(w: &[u8]) -> usize {
    w.iter().enumerate().filter(|(_, &b)| b == 1).fold(0, |acc, (i, _)| acc ^ (i + 1))
}

pub(crate) fn hamming(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

fn check_codes(n: usize, codes: &[BinaryCode]) -> Result<()> {
    if let Some(c) = codes.iter().find(|c| c.len != n) {
        return Err(err!(Dimension, "row code of length {} for sequences of length {n}", c.len));
    }
    Ok(())
}

/// Every decomposed row lies in its row code.
pub fn c1_membership(c: &CompositeSeq, codes: &[BinaryCode]) -> Result<bool> {
    if codes.len() != c.k() {
        return Err(err!(Dimension, "{} row codes for k = {}", codes.len(), c.k()));
    }
    check_codes(c.len(), codes)?;
    let rows = c.decompose()?;
    Ok(rows.rows().iter().zip(codes).all(|(r, code)| code.contains(r)))
}

/// Decodes every row with its own code, then reconstructs.
pub fn c1_decode(rows: &RowTuple, codes: &[BinaryCode]) -> Result<CompositeSeq> {
    if codes.len() != rows.k() {
        return Err(err!(Dimension, "{} row codes for {} rows", codes.len(), rows.k()));
    }
    check_codes(rows.len(), codes)?;
    let fixed = rows
        .rows()
        .iter()
        .zip(codes)
        .enumerate()
        .map(|(i, (r, code))| code.decode(r).map_err(|e| err!(DecodeFailure, "channel {i}: {e}")))
        .collect::<Result<Vec<_>>>()?;
    let c = RowTuple::new(fixed)?.reconstruct()?;
    if c.has_unknown() {
        return Err(err!(DecodeFailure, "decoded rows are not a valid decomposition"));
    }
    Ok(c)
}

/// Codewords of the product code, by filtering the whole space.
pub fn c1_codewords(k: usize, n: usize, codes: &[BinaryCode]) -> Result<Vec<CompositeSeq>> {
    let mut out = Vec::new();
    for c in all_sequences(k, n) {
        if c1_membership(&c, codes)? {
            out.push(c);
        }
    }
    Ok(out)
}

/// Positions of letters `k-1` and `k`, and the letters elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiberKey {
    pub positions: Vec<usize>,
    pub residue: Vec<u8>,
}

/// Splits `s` into its fiber key and the binary word read off letters `k-1`, `k`.
pub fn fiber_map(s: &CompositeSeq) -> Result<(FiberKey, Vec<u8>)> {
    if s.has_unknown() {
        return Err(err!(InvalidInput, "fiber map of a sequence with '?'"));
    }
    let top = s.k() as u8 - 1;
    let mut key = FiberKey { positions: Vec::new(), residue: Vec::new() };
    let mut word = Vec::new();
    for (i, &x) in s.letters().iter().enumerate() {
        if x >= top {
            key.positions.push(i);
            word.push(x - top);
        } else {
            key.residue.push(x);
        }
    }
    Ok((key, word))
}

/// Inverse of [`fiber_map`].
pub fn fiber_unmap(k: usize, key: &FiberKey, word: &[u8]) -> Result<CompositeSeq> {
    if word.len() != key.positions.len() {
        return Err(err!(Dimension, "fiber word length {} for {} positions", word.len(), key.positions.len()));
    }
    let n = key.positions.len() + key.residue.len();
    let mut letters = vec![0u8; n];
    let (mut w, mut r) = (word.iter(), key.residue.iter());
    let mut next = key.positions.iter().peekable();
    for (i, slot) in letters.iter_mut().enumerate() {
        if next.peek() == Some(&&i) {
            next.next();
            *slot = (k - 1) as u8 + w.next().expect("length checked");
        } else {
            *slot = *r.next().ok_or_else(|| err!(InvalidInput, "fiber residue too short"))?;
        }
    }
    CompositeSeq::new(k, letters)
}

/// Inner codes indexed by the number of `{k-1,k}` letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerCodes {
    codes: Vec<BinaryCode>,
}

impl InnerCodes {
    /// `codes[l]` must have length `l`.
    pub fn new(codes: Vec<BinaryCode>) -> Result<Self> {
        if let Some((l, c)) = codes.iter().enumerate().find(|(l, c)| c.len != *l) {
            return Err(err!(Dimension, "inner code for l = {l} has length {}", c.len));
        }
        Ok(Self { codes })
    }

    /// Shortened Hamming cosets with syndrome zero for every `l <= n`.
    pub fn hamming(n: usize) -> Self {
        Self { codes: (0..=n).map(|l| BinaryCode::hamming_coset(l, 0).expect("zero syndrome")).collect() }
    }

    pub fn get(&self, l: usize) -> Result<&BinaryCode> {
        self.codes.get(l).ok_or_else(|| err!(InvalidInput, "no inner code for l = {l}"))
    }

    pub fn max_len(&self) -> usize {
        self.codes.len() - 1
    }
}

/// `F(c)` lies in the inner code for `v(c)`.
pub fn c2_membership(c: &CompositeSeq, inner: &InnerCodes) -> Result<bool> {
    let (_, word) = fiber_map(c)?;
    Ok(inner.get(word.len())?.contains(&word))
}

/// `sum_l C(n,l) (k-1)^(n-l) |C(l)|`.
pub fn c2_size(n: usize, k: usize, inner: &InnerCodes) -> Result<BigUint> {
    let mut acc = BigUint::zero();
    for l in 0..=n {
        acc += binom(n, l) * pow(k - 1, n - l) * inner.get(l)?.size();
    }
    Ok(acc)
}

/// Codewords in lexicographic order.
pub fn c2_codewords(k: usize, n: usize, inner: &InnerCodes) -> Result<Vec<CompositeSeq>> {
    let mut out = Vec::new();
    for c in all_sequences(k, n) {
        if c2_membership(&c, inner)? {
            out.push(c);
        }
    }
    Ok(out)
}

/// Corrects one flip in row 0.
///
/// A `'?'` can only come from a 0 turning into 1 in row 0, so that bit is
/// reverted. Otherwise the flip swapped some `k-1` and `k`, which the inner
/// code on the fiber word locates.
pub fn c2_decode(rows: &RowTuple, inner: &InnerCodes) -> Result<CompositeSeq> {
    let y = rows.reconstruct()?;
    let unknown = y.unknown_positions();
    match unknown.len() {
        0 => {}
        1 => {
            let j = unknown[0];
            let mut r = rows.clone().into_rows();
            if r[0][j] != 1 {
                return Err(err!(Precondition, "'?' at {j} not caused by a row-0 flip"));
            }
            r[0][j] = 0;
            let c = RowTuple::new(r)?.reconstruct()?;
            if c.has_unknown() {
                return Err(err!(Precondition, "'?' at {j} survives reverting row 0"));
            }
            return Ok(c);
        }
        u => return Err(err!(Precondition, "{u} '?' letters; one row-0 flip makes at most one")),
    }
    let (key, word) = fiber_map(&y)?;
    let fixed = inner.get(word.len())?.decode(&word)?;
    match hamming(&word, &fixed) {
        0 | 1 => fiber_unmap(y.k(), &key, &fixed),
        d => Err(err!(Precondition, "inner decoder moved {d} bits")),
    }
}

/// Single-flip code for an unknown row: `sum (i+1) x[i] = a mod (2n+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeeCode {
    pub n: usize,
    pub k: usize,
    pub a: usize,
}

impl LeeCode {
    pub fn new(n: usize, k: usize, a: usize) -> Result<Self> {
        if a > 2 * n {
            return Err(err!(Domain, "residue {a} must be below {}", 2 * n + 1));
        }
        if k == 0 {
            return Err(err!(Domain, "k must be positive"));
        }
        Ok(Self { n, k, a })
    }

    pub fn modulus(&self) -> usize {
        2 * self.n + 1
    }

    fn checksum(&self, x: &[u8]) -> usize {
        x.iter().enumerate().map(|(i, &v)| (i + 1) * v as usize).sum::<usize>() % self.modulus()
    }

    pub fn contains(&self, x: &CompositeSeq) -> bool {
        x.k() == self.k && x.len() == self.n && !x.has_unknown() && self.checksum(x.letters()) == self.a
    }

    pub fn codewords(&self) -> Vec<CompositeSeq> {
        all_sequences(self.k, self.n).filter(|x| self.contains(x)).collect()
    }

    /// Corrects one flip in any row; the row index is not needed.
    pub fn decode(&self, rows: &RowTuple) -> Result<CompositeSeq> {
        if rows.k() != self.k || rows.len() != self.n {
            return Err(err!(Dimension, "expected {} rows of length {}", self.k, self.n));
        }
        let y = rows.reconstruct()?;
        let mut x = y.letters().to_vec();
        let unknown = y.unknown_positions();
        if unknown.len() > 1 {
            return Err(err!(Precondition, "{} '?' letters; one flip makes at most one", unknown.len()));
        }
        for &j in &unknown {
            x[j] = repair_column(&rows.column(j))?;
        }
        let m = self.modulus();
        let s = (self.checksum(&x) + m - self.a) % m;
        if s == 0 {
            return CompositeSeq::new(self.k, x);
        }
        if s <= self.n {
            // one letter went up by one at position s
            let v = &mut x[s - 1];
            if *v == 0 {
                return Err(err!(Precondition, "syndrome {s} points at a zero letter"));
            }
            *v -= 1;
        } else {
            let v = &mut x[m - s - 1];
            if *v as usize == self.k {
                return Err(err!(Precondition, "syndrome {s} points at a top letter"));
            }
            *v += 1;
        }
        CompositeSeq::new(self.k, x)
    }
}

/// Resolves a column with a single descent left by one flip.
///
/// `110` means the lower bit dropped, `100` means the upper bit rose; otherwise
/// the two bits are swapped, leaving a letter off by one that the checksum fixes.
fn repair_column(col: &[u8]) -> Result<u8> {
    let k = col.len();
    let i = (0..k - 1)
        .find(|&i| col[i] == 1 && col[i + 1] == 0)
        .ok_or_else(|| err!(Precondition, "column has no descent"))?;
    let mut v = col.to_vec();
    if i > 0 && v[i - 1] == 1 {
        v[i + 1] = 1;
    } else if i + 2 < k && v[i + 2] == 0 {
        v[i] = 0;
    } else {
        v.swap(i, i + 1);
    }
    match column_letter(&v) {
        UNKNOWN => Err(err!(Precondition, "column {col:?} has more than one flip")),
        l => Ok(l),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn seq(k: usize, s: &str) -> CompositeSeq {
        CompositeSeq::parse(k, s).unwrap()
    }

    #[test]
    fn hamming_cosets_partition() {
        for len in 0..=8 {
            let r = ceil_log(2, len + 1);
            let mut total = BigUint::zero();
            for a in 0..1 << r {
                let code = BinaryCode::hamming_coset(len, a).unwrap();
                assert_eq!(BigUint::from(code.words().len()), code.size());
                total += code.size();
                for w in code.words() {
                    assert_eq!(code.decode(&w).unwrap(), w);
                    for i in 0..len {
                        let mut y = w.clone();
                        y[i] ^= 1;
                        assert_eq!(code.decode(&y).unwrap(), w);
                    }
                }
            }
            assert_eq!(total, pow(2, len));
        }
        assert!(BinaryCode::hamming_coset(3, 4).is_err());
    }

    #[test]
    fn codebooks() {
        let c = BinaryCode::codebook(3, 1, vec![vec![1, 1, 1], vec![0, 0, 0]]).unwrap();
        assert_eq!(c.words()[0], [0, 0, 0]);
        assert_eq!(c.decode(&[1, 0, 1]).unwrap(), [1, 1, 1]);
        assert!(BinaryCode::codebook(3, 1, vec![vec![1, 1, 0], vec![0, 0, 0]]).is_err());
        let d = BinaryCode::codebook(4, 0, vec![vec![0, 0, 0, 0]]).unwrap();
        assert!(d.decode(&[1, 0, 0, 0]).is_err());
    }

    #[test]
    fn fiber_example() {
        let s = seq(4, "1324403");
        let (key, word) = fiber_map(&s).unwrap();
        assert_eq!(word, [0, 1, 1, 0]);
        assert_eq!(key.positions, [1, 3, 4, 6]);
        assert_eq!(fiber_unmap(4, &key, &word).unwrap(), s);
        let (_, w) = fiber_map(&seq(4, "0120")).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn trivial_product_code_holds_everything() {
        let codes = [BinaryCode::trivial(3), BinaryCode::trivial(3)];
        assert_eq!(c1_codewords(2, 3, &codes).unwrap().len(), 27);
        assert!(c1_membership(&seq(2, "000"), &codes).unwrap());
    }

    #[test]
    fn c2_counts_match_formula() {
        for k in 2..=3 {
            for n in 0..=5 {
                let inner = InnerCodes::hamming(n);
                let words = c2_codewords(k, n, &inner).unwrap();
                assert_eq!(BigUint::from(words.len()), c2_size(n, k, &inner).unwrap());
                assert_eq!(c2_size(n, k, &inner).unwrap(), crate::bounds::fiber_size(n, k));
            }
        }
    }

    #[test]
    fn lee_repairs() {
        assert_eq!(repair_column(&[0, 1, 1, 0]).unwrap(), 3);
        assert_eq!(repair_column(&[0, 1, 0, 0]).unwrap(), 0);
        assert_eq!(repair_column(&[1, 0]).unwrap(), 1);
        let code = LeeCode::new(3, 4, 0).unwrap();
        let c = code.codewords()[5].clone();
        let mut rows = c.decompose().unwrap().into_rows();
        rows[2][1] ^= 1;
        assert_eq!(code.decode(&RowTuple::new(rows).unwrap()).unwrap(), c);
        assert_eq!(c.to_string().len(), 3);
    }
}
