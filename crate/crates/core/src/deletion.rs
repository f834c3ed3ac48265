//! Single-deletion codes at resolution 2.
//!
//! Building blocks are the binary VT code and a systematic ternary code
//! `s p p z` with marker `p = s[m] + 1 mod 3`. The redundancy `z` carries a
//! VT-style checksum of the non-decrease indicator of `s` and the symbol sum
//! of `s`. On top of these sit four composite codes:
//!
//! * `c3`: row 0 in a VT code; corrects one deletion in row 0.
//! * `c4`: systematic, row 0 protected through the ternary code.
//! * `c5`: the concatenated rows in a VT code; one deletion in either row.
//! * `c6`: systematic, both rows protected; one deletion in either row.
//!
//! Positions in the comments are 1-based, matching `s[m]`, `y0[m+1]` and so on.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::alphabet::{all_sequences, CompositeSeq, RowTuple};
use crate::arith::ceil_log;
use crate::error::{err, Result};

/// `sum (i+1) x[i] mod modulus`.
pub fn vt_checksum(x: &[u8], modulus: usize) -> usize {
    x.iter().enumerate().map(|(i, &b)| (i + 1) * b as usize).sum::<usize>() % modulus
}

/// `x` lies in `VT_a` with the given modulus.
pub fn vt_membership(x: &[u8], a: usize, modulus: usize) -> bool {
    vt_checksum(x, modulus) == a % modulus
}

/// Codewords of `VT_a(n)` in lexicographic order.
pub fn vt_codewords(n: usize, a: usize) -> Vec<Vec<u8>> {
    crate::alphabet::all_binary(n).filter(|x| vt_membership(x, a, n + 1)).collect()
}

/// Recovers the length-`n` word of `VT_a(n)` from one of its single deletions.
pub fn vt_decode(y: &[u8], a: usize, n: usize) -> Result<Vec<u8>> {
    if y.len() + 1 != n {
        return Err(err!(Dimension, "received length {} but code length is {n}", y.len()));
    }
    if let Some(&b) = y.iter().find(|&&b| b > 1) {
        return Err(err!(InvalidInput, "symbol {b} is not binary"));
    }
    let m = n + 1;
    let w = y.iter().filter(|&&b| b == 1).count();
    let gap = (a % m + m - vt_checksum(y, m)) % m;
    let mut x = y.to_vec();
    if gap <= w {
        // a 0 went missing with `gap` ones to its right
        let mut ones = 0;
        let mut pos = y.len();
        while ones < gap {
            pos -= 1;
            ones += y[pos] as usize;
        }
        x.insert(pos, 0);
    } else {
        // a 1 went missing with `gap - w - 1` zeros to its left
        let zeros = gap - w - 1;
        let mut seen = 0;
        let mut pos = 0;
        while pos < y.len() && (seen < zeros || y[pos] == 1) {
            seen += (y[pos] == 0) as usize;
            pos += 1;
        }
        if seen != zeros {
            return Err(err!(Precondition, "no single insertion reaches residue {a}"));
        }
        x.insert(pos, 1);
    }
    if !vt_membership(&x, a, m) {
        return Err(err!(Precondition, "no single insertion reaches residue {a}"));
    }
    Ok(x)
}

/// Systematic ternary single-deletion codeword `s p p z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystematicCodeword {
    pub data: Vec<u8>,
    pub marker: u8,
    pub redundancy: Vec<u8>,
}

impl SystematicCodeword {
    pub fn to_vec(&self) -> Vec<u8> {
        let mut v = self.data.clone();
        v.extend([self.marker, self.marker]);
        v.extend(&self.redundancy);
        v
    }
}

/// Number of checksum digits for data length `m`.
pub fn checksum_digits(m: usize) -> usize {
    ceil_log(3, m)
}

/// Non-decrease checksum `sum_{i>=2} (i-1) [s_i >= s_(i-1)] mod m`.
fn order_checksum(s: &[u8]) -> usize {
    let m = s.len();
    (1..m).filter(|&i| s[i] >= s[i - 1]).sum::<usize>() % m
}

fn redundancy(s: &[u8]) -> Vec<u8> {
    let t = checksum_digits(s.len());
    let mut c = order_checksum(s);
    let mut z = vec![0u8; t + 1];
    for d in z[..t].iter_mut().rev() {
        *d = (c % 3) as u8;
        c /= 3;
    }
    z[t] = (s.iter().map(|&x| x as usize).sum::<usize>() % 3) as u8;
    z
}

fn check_ternary(s: &[u8]) -> Result<()> {
    match s.iter().find(|&&x| x > 2) {
        Some(&x) => Err(err!(InvalidInput, "symbol {x} is not ternary")),
        None => Ok(()),
    }
}

/// Systematic encoder.
pub fn ten_encode(s: &[u8]) -> Result<SystematicCodeword> {
    if s.is_empty() {
        return Err(err!(Domain, "message must be nonempty"));
    }
    check_ternary(s)?;
    Ok(SystematicCodeword { data: s.to_vec(), marker: (s[s.len() - 1] + 1) % 3, redundancy: redundancy(s) })
}

/// Total codeword length for data length `m`.
pub fn ten_codeword_len(m: usize) -> usize {
    m + checksum_digits(m) + 3
}

fn ten_message_len(codeword_len: usize) -> Result<usize> {
    (1..=codeword_len)
        .find(|&m| ten_codeword_len(m) == codeword_len)
        .ok_or_else(|| err!(Dimension, "no data length gives codeword length {codeword_len}"))
}

/// Recovers the data from a codeword with one symbol deleted.
pub fn ten_decode(x: &[u8]) -> Result<Vec<u8>> {
    check_ternary(x)?;
    let m = ten_message_len(x.len() + 1)?;
    ten_decode_len(x, m)
}

fn ten_decode_len(x: &[u8], m: usize) -> Result<Vec<u8>> {
    if x.len() + 1 != ten_codeword_len(m) {
        return Err(err!(Dimension, "received length {} does not fit data length {m}", x.len()));
    }
    // x[m] and x[m+1] in 1-based terms
    if x[m - 1] != x[m] {
        return Ok(x[..m].to_vec());
    }
    let rest = &x[..m - 1];
    let z = &x[m + 1..];
    let t = checksum_digits(m);
    let c = z[..t].iter().fold(0usize, |acc, &d| acc * 3 + d as usize);
    let sum_rest = rest.iter().map(|&v| v as usize).sum::<usize>();
    let v = ((z[t] as usize + 3 * m - sum_rest % 3) % 3) as u8;
    let mut found = BTreeSet::new();
    for pos in 0..m {
        let mut s = rest.to_vec();
        s.insert(pos, v);
        if order_checksum(&s) == c % m {
            found.insert(s);
        }
    }
    let mut it = found.into_iter();
    match (it.next(), it.next()) {
        (Some(s), None) => Ok(s),
        (None, _) => Err(err!(Precondition, "no data word matches the redundancy")),
        (Some(_), Some(_)) => Err(err!(Precondition, "several data words match the redundancy")),
    }
}

fn check_k2(c: &CompositeSeq) -> Result<()> {
    if c.k() != 2 {
        return Err(err!(Unsupported, "deletion codes need k = 2, got k = {}", c.k()));
    }
    if c.has_unknown() {
        return Err(err!(InvalidInput, "sequence contains '?'"));
    }
    Ok(())
}

fn rebuild(r0: Vec<u8>, r1: Vec<u8>) -> Result<CompositeSeq> {
    let c = RowTuple::new(vec![r0, r1])?.reconstruct()?;
    if c.has_unknown() {
        return Err(err!(Precondition, "recovered rows are not a valid decomposition"));
    }
    Ok(c)
}

/// Row 0 lies in `VT_a(n)`.
pub fn c3_membership(c: &CompositeSeq, a: usize) -> Result<bool> {
    check_k2(c)?;
    Ok(vt_membership(&c.row(0), a, c.len() + 1))
}

pub fn c3_codewords(n: usize, a: usize) -> Vec<CompositeSeq> {
    all_sequences(2, n).filter(|c| vt_membership(&c.row(0), a, n + 1)).collect()
}

/// Corrects one deletion in row 0.
pub fn c3_decode(y0: &[u8], y1: &[u8], a: usize) -> Result<CompositeSeq> {
    let n = y1.len();
    let r0 = vt_decode(y0, a, n)?;
    rebuild(r0, y1.to_vec())
}

/// Concatenated rows lie in `VT_a(2n)`.
pub fn c5_membership(c: &CompositeSeq, a: usize) -> Result<bool> {
    check_k2(c)?;
    let mut w = c.row(0);
    w.extend(c.row(1));
    Ok(vt_membership(&w, a, 2 * c.len() + 1))
}

pub fn c5_codewords(n: usize, a: usize) -> Vec<CompositeSeq> {
    all_sequences(2, n).filter(|c| c5_membership(c, a).unwrap_or(false)).collect()
}

/// Corrects one deletion in either row; the shorter row is the damaged one.
pub fn c5_decode(y0: &[u8], y1: &[u8], a: usize) -> Result<CompositeSeq> {
    let n = y0.len().max(y1.len());
    if y0.len() + y1.len() + 1 != 2 * n {
        return Err(err!(Precondition, "exactly one row must be one symbol short"));
    }
    let mut w = y0.to_vec();
    w.extend(y1);
    let x = vt_decode(&w, a, 2 * n)?;
    rebuild(x[..n].to_vec(), x[n..].to_vec())
}

/// Offsets of the parts of a systematic composite codeword, 0-based half-open.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Layout {
    /// Data length.
    pub m: usize,
    /// Checksum digits in the redundancy.
    pub t: usize,
    /// Whether the `0 2` separator follows the marker.
    pub separator: bool,
}

impl Layout {
    pub fn c4(m: usize) -> Self {
        Self { m, t: checksum_digits(m), separator: false }
    }

    pub fn c6(m: usize) -> Self {
        Self { m, t: checksum_digits(2 * m), separator: true }
    }

    pub fn data(&self) -> Range<usize> {
        0..self.m
    }

    pub fn marker(&self) -> Range<usize> {
        self.m..self.m + 2
    }

    pub fn separator(&self) -> Range<usize> {
        let s = self.m + 2;
        s..s + if self.separator { 2 } else { 0 }
    }

    pub fn redundancy(&self) -> Range<usize> {
        let s = self.separator().end;
        s..s + self.t + 1
    }

    pub fn len(&self) -> usize {
        self.redundancy().end
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn from_len(len: usize, c6: bool) -> Result<Self> {
        (1..=len)
            .map(|m| if c6 { Self::c6(m) } else { Self::c4(m) })
            .find(|l| l.len() == len)
            .ok_or_else(|| err!(Dimension, "no data length gives codeword length {len}"))
    }
}

/// `s p' p' z` with `p = s0[m] + 1` and `p' = p + 1 mod 3`; `z` protects row 0.
pub fn c4_encode(s: &CompositeSeq) -> Result<CompositeSeq> {
    check_k2(s)?;
    if s.is_empty() {
        return Err(err!(Domain, "message must be nonempty"));
    }
    let enc = ten_encode(&s.row(0))?;
    let mut letters = s.letters().to_vec();
    let p2 = (enc.marker + 1) % 3;
    letters.extend([p2, p2]);
    letters.extend(enc.redundancy);
    CompositeSeq::new(2, letters)
}

/// Corrects one deletion in row 0 of a `c4` codeword.
pub fn c4_decode(y0: &[u8], y1: &[u8]) -> Result<CompositeSeq> {
    if y0.len() + 1 != y1.len() {
        return Err(err!(Precondition, "row 0 must be exactly one symbol short"));
    }
    let lay = Layout::from_len(y1.len(), false)?;
    let m = lay.m;
    let s1 = y1[..m].to_vec();
    if y0[m - 1] != y0[m] {
        return rebuild(y0[..m].to_vec(), s1);
    }
    // deletion inside the data: the tail of row 0 moved one step left
    let tail = RowTuple::new(vec![y0[m - 1..].to_vec(), y1[m..].to_vec()])?.reconstruct()?;
    if tail.has_unknown() {
        return Err(err!(Precondition, "marker and redundancy columns are invalid"));
    }
    let tail = tail.letters();
    let p = (tail[0] + 2) % 3;
    let mut x = y0[..m - 1].to_vec();
    x.extend([p, p]);
    x.extend(&tail[2..]);
    let s0 = ten_decode_len(&x, m)?;
    rebuild(s0, s1)
}

/// Marker letter after the data: `2, 1, 0` for last letter `0, 1, 2`.
fn c6_marker(last: u8) -> u8 {
    2 - last
}

/// `s p' p' 0 2 z` with `z` computed from the concatenated rows.
pub fn c6_encode(s: &CompositeSeq) -> Result<CompositeSeq> {
    check_k2(s)?;
    if s.is_empty() {
        return Err(err!(Domain, "message must be nonempty"));
    }
    let mut both = s.row(0);
    both.extend(s.row(1));
    let p = c6_marker(s.letters()[s.len() - 1]);
    let mut letters = s.letters().to_vec();
    letters.extend([p, p, 0, 2]);
    letters.extend(redundancy(&both));
    CompositeSeq::new(2, letters)
}

/// Corrects one deletion in either row of a `c6` codeword.
pub fn c6_decode(y0: &[u8], y1: &[u8]) -> Result<CompositeSeq> {
    let (short_row, n) = match (y0.len(), y1.len()) {
        (a, b) if a + 1 == b => (0, b),
        (a, b) if b + 1 == a => (1, a),
        _ => return Err(err!(Precondition, "exactly one row must be one symbol short")),
    };
    let lay = Layout::c6(Layout::from_len(n, true)?.m);
    let m = lay.m;
    // b(y, i) is the 1-based bit y[i]
    let b = |y: &[u8], i: usize| y[i - 1];
    if short_row == 0 {
        let s1 = y1[..m].to_vec();
        let intact = match (b(y1, m), b(y1, m + 1)) {
            (0, 0) => return Err(err!(Precondition, "row-0 deletion with intact row pattern 00 is impossible")),
            (1, 1) => b(y0, m + 3) == 0,
            _ => b(y0, m) != b(y0, m + 1),
        };
        if intact {
            return rebuild(y0[..m].to_vec(), s1);
        }
        let z = RowTuple::new(vec![y0[m + 3..].to_vec(), y1[m + 4..].to_vec()])?.reconstruct()?;
        let p = s1[m - 1] + 1;
        let mut x = y0[..m - 1].to_vec();
        x.extend(&s1);
        let s = data_from_redundancy(x, p, &z, m)?;
        rebuild(s[..m].to_vec(), s1)
    } else {
        let s0 = y0[..m].to_vec();
        let (intact, last_s1) = match (b(y0, m), b(y0, m + 1)) {
            (1, 1) => return Err(err!(Precondition, "row-1 deletion with intact row pattern 11 is impossible")),
            (0, 0) => (b(y1, m + 2) == 1, 1),
            (0, 1) => (b(y1, m) != b(y1, m + 1), 0),
            _ => (b(y1, m) != b(y1, m + 1), 1),
        };
        if intact {
            return rebuild(s0, y1[..m].to_vec());
        }
        let z = RowTuple::new(vec![y0[m + 4..].to_vec(), y1[m + 3..].to_vec()])?.reconstruct()?;
        let mut x = s0.clone();
        x.extend(&y1[..m - 1]);
        let s = data_from_redundancy(x, last_s1 + 1, &z, m)?;
        rebuild(s0, s[m..].to_vec())
    }
}

/// Runs the ternary decoder on `x p p z`, where `x` is the doubled data with one symbol missing.
fn data_from_redundancy(mut x: Vec<u8>, p: u8, z: &CompositeSeq, m: usize) -> Result<Vec<u8>> {
    if z.has_unknown() {
        return Err(err!(Precondition, "redundancy columns are invalid"));
    }
    x.extend([p, p]);
    x.extend(z.letters());
    ten_decode_len(&x, 2 * m)
}
