//! Composite alphabets and the decomposition and reconstruction mappings.
//!
//! For a binary base alphabet the composite letters of resolution `k` are
//! identified with `0..=k`: letter `i` decomposes into the column
//! `[0^(k-i) 1^i]`, row 0 on top. General base alphabets are handled at the
//! letter level through [`CompositeLetter`].

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::arith::binom;
use crate::error::{err, Result};

/// Marker for a column that is not a valid decomposition.
pub const UNKNOWN: u8 = u8::MAX;

/// Base alphabet size `q` and resolution `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CompositeParams {
    q: usize,
    k: usize,
}

impl CompositeParams {
    pub fn new(q: usize, k: usize) -> Result<Self> {
        if q < 2 {
            return Err(err!(Domain, "base alphabet size q = {q} must be at least 2"));
        }
        if k < 1 {
            return Err(err!(Domain, "resolution k = {k} must be at least 1"));
        }
        Ok(Self { q, k })
    }

    pub fn binary(k: usize) -> Result<Self> {
        Self::new(2, k)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of composite letters, `C(k+q-1, q-1)`.
    pub fn alphabet_size(&self) -> BigUint {
        binom(self.k + self.q - 1, self.q - 1)
    }

    /// All composite letters, ordered lexicographically by count vector, largest first.
    pub fn letters(&self) -> Vec<CompositeLetter> {
        let mut out = Vec::new();
        let mut counts = vec![0usize; self.q];
        fill_counts(&mut counts, 0, self.k, &mut out);
        out
    }
}

fn fill_counts(counts: &mut [usize], idx: usize, left: usize, out: &mut Vec<CompositeLetter>) {
    if idx + 1 == counts.len() {
        counts[idx] = left;
        out.push(CompositeLetter { counts: counts.to_vec() });
        return;
    }
    for c in (0..=left).rev() {
        counts[idx] = c;
        fill_counts(counts, idx + 1, left - c, out);
    }
    counts[idx] = 0;
}

/// A composite letter given by how many of its `k` parts carry each base symbol.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompositeLetter {
    counts: Vec<usize>,
}

impl CompositeLetter {
    pub fn new(counts: Vec<usize>) -> Self {
        Self { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// The letter of a binary alphabet with `ones` parts equal to 1.
    pub fn binary(k: usize, ones: usize) -> Self {
        Self { counts: vec![k - ones, ones] }
    }
}

/// Sorted column `[0^k0 1^k1 ... (q-1)^k(q-1)]` of a letter.
pub fn decompose_letter(params: &CompositeParams, letter: &CompositeLetter) -> Result<Vec<u8>> {
    if letter.counts.len() != params.q {
        return Err(err!(
            InvalidLetter,
            "letter has {} counts, expected q = {}",
            letter.counts.len(),
            params.q
        ));
    }
    let total: usize = letter.counts.iter().sum();
    if total != params.k {
        return Err(err!(InvalidLetter, "counts sum to {total}, expected k = {}", params.k));
    }
    let mut col = Vec::with_capacity(params.k);
    for (sym, &c) in letter.counts.iter().enumerate() {
        col.extend(core::iter::repeat_n(sym as u8, c));
    }
    Ok(col)
}

/// Inverse of [`decompose_letter`]; `None` when the column is not sorted.
pub fn reconstruct_column(params: &CompositeParams, col: &[u8]) -> Result<Option<CompositeLetter>> {
    if col.len() != params.k {
        return Err(err!(Dimension, "column has length {}, expected k = {}", col.len(), params.k));
    }
    if let Some(&bad) = col.iter().find(|&&x| x as usize >= params.q) {
        return Err(err!(InvalidInput, "column symbol {bad} outside base alphabet of size {}", params.q));
    }
    if col.windows(2).any(|w| w[0] > w[1]) {
        return Ok(None);
    }
    let mut counts = vec![0usize; params.q];
    for &x in col {
        counts[x as usize] += 1;
    }
    Ok(Some(CompositeLetter { counts }))
}

/// Decomposes a sequence of general composite letters into `k` rows.
pub fn decompose_letters(params: &CompositeParams, seq: &[CompositeLetter]) -> Result<RowTuple> {
    let mut rows = vec![Vec::with_capacity(seq.len()); params.k];
    for letter in seq {
        let col = decompose_letter(params, letter)?;
        for (row, x) in rows.iter_mut().zip(col) {
            row.push(x);
        }
    }
    RowTuple::new(rows)
}

/// Columnwise reconstruction into general composite letters.
pub fn reconstruct_letters(params: &CompositeParams, rows: &RowTuple) -> Result<Vec<Option<CompositeLetter>>> {
    if rows.rows.len() != params.k {
        return Err(err!(Dimension, "got {} rows, expected k = {}", rows.rows.len(), params.k));
    }
    (0..rows.len()).map(|i| reconstruct_column(params, &rows.column(i))).collect()
}

/// Binary-base column of letter `sigma` at resolution `k`.
pub fn letter_column(k: usize, sigma: u8) -> Vec<u8> {
    let s = sigma as usize;
    let mut col = vec![0u8; k - s];
    col.extend(core::iter::repeat_n(1, s));
    col
}

/// Letter of a binary column, or [`UNKNOWN`] when the column is not sorted.
pub fn column_letter(col: &[u8]) -> u8 {
    if col.windows(2).any(|w| w[0] > w[1]) {
        UNKNOWN
    } else {
        col.iter().filter(|&&b| b == 1).count() as u8
    }
}

/// A sequence over the binary-base composite alphabet `0..=k`, possibly holding [`UNKNOWN`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompositeSeq {
    k: usize,
    letters: Vec<u8>,
}

impl CompositeSeq {
    pub fn new(k: usize, letters: Vec<u8>) -> Result<Self> {
        if k == 0 || k >= UNKNOWN as usize {
            return Err(err!(Domain, "resolution k = {k} must lie in 1..=254"));
        }
        if let Some(&bad) = letters.iter().find(|&&x| x != UNKNOWN && x as usize > k) {
            return Err(err!(InvalidLetter, "letter {bad} exceeds k = {k}"));
        }
        Ok(Self { k, letters })
    }

    /// Builds a sequence without checks; callers guarantee letters lie in `0..=k`.
    pub(crate) fn from_raw(k: usize, letters: Vec<u8>) -> Self {
        Self { k, letters }
    }

    pub fn zeros(k: usize, n: usize) -> Result<Self> {
        Self::new(k, vec![0; n])
    }

    /// Parses a digit string such as `"02?340"` or a comma separated list such as `"10,0,?"`.
    pub fn parse(k: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut letters = Vec::new();
        if text.contains(',') || k > 9 {
            for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                letters.push(parse_token(tok)?);
            }
        } else {
            for ch in text.chars().filter(|c| !c.is_whitespace()) {
                let mut buf = [0u8; 4];
                letters.push(parse_token(ch.encode_utf8(&mut buf))?);
            }
        }
        Self::new(k, letters)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.letters
    }

    pub fn has_unknown(&self) -> bool {
        self.letters.contains(&UNKNOWN)
    }

    /// Positions holding [`UNKNOWN`].
    pub fn unknown_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.letters[i] == UNKNOWN).collect()
    }

    fn require_valid(&self, what: &str) -> Result<()> {
        if self.has_unknown() {
            return Err(err!(InvalidInput, "{what} needs a sequence without '?'"));
        }
        Ok(())
    }

    /// Splits the sequence into its `k` binary rows.
    pub fn decompose(&self) -> Result<RowTuple> {
        self.require_valid("decomposition")?;
        Ok(self.rows_unchecked())
    }

    pub(crate) fn rows_unchecked(&self) -> RowTuple {
        let n = self.len();
        let mut rows = vec![vec![0u8; n]; self.k];
        for (i, &s) in self.letters.iter().enumerate() {
            for r in self.k - s as usize..self.k {
                rows[r][i] = 1;
            }
        }
        RowTuple { rows }
    }

    /// Single row `r` of the decomposition.
    pub fn row(&self, r: usize) -> Vec<u8> {
        self.letters.iter().map(|&s| (s as usize + r >= self.k) as u8).collect()
    }

    /// Letterwise `k - c[i]`.
    pub fn reverse(&self) -> Result<Self> {
        self.require_valid("reversal")?;
        let k = self.k as u8;
        Ok(Self::from_raw(self.k, self.letters.iter().map(|&c| k - c).collect()))
    }

    /// Letterwise `(c[i] + delta) mod (k+1)`.
    pub fn shift(&self, delta: i64) -> Result<Self> {
        self.require_valid("shift")?;
        let m = self.k as i64 + 1;
        Ok(Self::from_raw(
            self.k,
            self.letters.iter().map(|&c| (c as i64 + delta).rem_euclid(m) as u8).collect(),
        ))
    }
}

fn parse_token(tok: &str) -> Result<u8> {
    if tok == "?" {
        return Ok(UNKNOWN);
    }
    tok.parse::<u8>()
        .ok()
        .filter(|&v| v != UNKNOWN)
        .ok_or_else(|| err!(InvalidLetter, "cannot parse letter {tok:?}"))
}

impl fmt::Display for CompositeSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.k > 9 { "," } else { "" };
        for (i, &c) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            if c == UNKNOWN {
                f.write_str("?")?;
            } else {
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

/// The `k` rows sent over the individual channels, all of equal length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowTuple {
    rows: Vec<Vec<u8>>,
}

impl RowTuple {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(err!(Dimension, "a row tuple needs at least one row"));
        }
        let n = rows[0].len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(err!(
                Dimension,
                "row {i} has length {} but row 0 has length {n}; reconstruction needs equal lengths",
                r.len()
            ));
        }
        Ok(Self { rows })
    }

    /// Parses rows given as digit strings.
    pub fn parse<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .trim()
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as u8)
                            .ok_or_else(|| err!(InvalidInput, "row symbol {c:?} is not a digit"))
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u8>> {
        self.rows
    }

    /// Number of rows.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Common row length.
    pub fn len(&self) -> usize {
        self.rows[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn column(&self, i: usize) -> Vec<u8> {
        self.rows.iter().map(|r| r[i]).collect()
    }

    /// True when every column is sorted top to bottom.
    pub fn is_valid(&self) -> bool {
        (0..self.len()).all(|i| self.rows.windows(2).all(|w| w[0][i] <= w[1][i]))
    }

    /// Binary-base reconstruction; unsorted columns become [`UNKNOWN`].
    pub fn reconstruct(&self) -> Result<CompositeSeq> {
        if let Some(&bad) = self.rows.iter().flatten().find(|&&b| b > 1) {
            return Err(err!(InvalidInput, "row symbol {bad} is not binary"));
        }
        let k = self.k();
        let letters = (0..self.len())
            .map(|i| {
                let mut prev = 0u8;
                let mut ones = 0u8;
                for r in &self.rows {
                    let b = r[i];
                    if b < prev {
                        return UNKNOWN;
                    }
                    prev = b;
                    ones += b;
                }
                ones
            })
            .collect();
        CompositeSeq::new(k, letters)
    }
}

impl fmt::Display for RowTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for &b in r {
                write!(f, "{b}")?;
            }
        }
        Ok(())
    }
}

/// Every sequence in `{0..=k}^n` in lexicographic order.
pub fn all_sequences(k: usize, n: usize) -> impl Iterator<Item = CompositeSeq> {
    let mut cur: Option<Vec<u8>> = Some(vec![0; n]);
    core::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut i = n;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if (next[i] as usize) < k {
                next[i] += 1;
                cur = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(CompositeSeq::from_raw(k, out))
    })
}

/// Every binary word of length `n` in lexicographic order.
pub fn all_binary(n: usize) -> impl Iterator<Item = Vec<u8>> {
    all_sequences(1, n).map(CompositeSeq::into_letters)
}

/// Renders a binary or small-alphabet row as a digit string.
pub fn row_string(row: &[u8]) -> String {
    row.iter().map(|&b| char::from(b'0' + b)).collect()
}
