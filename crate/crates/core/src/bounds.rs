//! Exact upper and lower bounds on composite code sizes.
//!
//! Every value is an exact rational. The single irrational quantity, a square
//! root in the total-two-error bound, is bracketed by rationals and the bound
//! is evaluated at the end of the bracket that keeps it valid.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{binom, ceil_log, floor, pow, rat, rat_int, rat_pow, rat_u, sqrt_bracket, Rational};
use crate::balls::{DelSpec, ErrorSpec, SubErrorSpec};
use crate::counting::{count_runs_weight, count_v};
use crate::error::{err, Result};

/// Bits of precision for the square-root bracket.
pub const DEFAULT_SQRT_BITS: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    ValidUpper,
    ValidLower,
    /// Leading-order estimate; not a finite-length guarantee.
    AsymptoticEstimate,
    /// Space size over average ball size; a benchmark, not a bound.
    AverageValue,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::ValidUpper => "valid_upper",
            BoundKind::ValidLower => "valid_lower",
            BoundKind::AsymptoticEstimate => "asymptotic_estimate",
            BoundKind::AverageValue => "average_value",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub value: Rational,
    pub value_floor: BigInt,
    pub kind: BoundKind,
    /// Range of parameters for which the formula holds, e.g. `"n >= 4"`.
    pub validity: String,
}

fn result(value: Rational, kind: BoundKind, validity: &str) -> BoundResult {
    BoundResult { value_floor: floor(&value), value, kind, validity: validity.to_string() }
}

fn three_pow(n: usize) -> Rational {
    rat_u(&pow(3, n))
}

fn per_channel_pair(spec: &SubErrorSpec) -> Option<(usize, usize)> {
    match spec {
        SubErrorSpec::PerChannel(e) if e.len() == 2 => Some((e[0], e[1])),
        _ => None,
    }
}

/// Sphere packing bound at resolution 2: `3^n / C(n, min(e0,e1))` or `3^n / C(n, e)`.
pub fn sphere_packing_upper(n: usize, spec: &SubErrorSpec) -> Result<BoundResult> {
    let e = match spec {
        SubErrorSpec::Total(e) => {
            if *e == 0 {
                return Err(err!(Domain, "total budget must be positive"));
            }
            if *e > n {
                return Err(err!(Domain, "budget e = {e} exceeds n = {n}"));
            }
            *e
        }
        _ => {
            let (e0, e1) =
                per_channel_pair(spec).ok_or_else(|| err!(Unsupported, "sphere packing bound needs k = 2"))?;
            if e0 + e1 == 0 {
                return Err(err!(Domain, "at least one channel budget must be positive"));
            }
            if e0.max(e1) > n {
                return Err(err!(Domain, "budget exceeds n = {n}"));
            }
            e0.min(e1)
        }
    };
    Ok(result(three_pow(n) / rat_u(&binom(n, e)), BoundKind::ValidUpper, "k = 2"))
}

/// Which leading-order estimate to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoticForm {
    /// `3^n e0^e0 e1^e1 / (n/3)^(e0+e1)`, or `3^n / (4n/(3e))^e` under a total budget.
    Standard,
    /// `3^n e0^e0 e1^e1 / (2n/3)^(e0+e1)`, for budgets within a factor two of each other.
    Tight,
}

/// Leading-order upper estimates; always reported as [`BoundKind::AsymptoticEstimate`].
pub fn asymptotic_upper(n: usize, spec: &SubErrorSpec, form: AsymptoticForm) -> Result<BoundResult> {
    if n == 0 {
        return Err(err!(Domain, "n must be positive"));
    }
    match spec {
        SubErrorSpec::Total(e) => {
            if *e == 0 || e % 2 == 1 {
                return Err(err!(Unsupported, "total-budget estimate needs a positive even e, got {e}"));
            }
            if form == AsymptoticForm::Tight {
                return Err(err!(Unsupported, "the tight form applies to per-channel budgets only"));
            }
            let base = rat(BigInt::from(4 * n), BigInt::from(3 * e));
            Ok(result(three_pow(n) / rat_pow(&base, *e), BoundKind::AsymptoticEstimate, "n -> infinity, even e"))
        }
        _ => {
            let (e0, e1) = per_channel_pair(spec).ok_or_else(|| err!(Unsupported, "estimate needs k = 2"))?;
            if e0 == 0 || e1 == 0 {
                return Err(err!(Domain, "both channel budgets must be positive"));
            }
            let (lo, hi) = (e0.min(e1), e0.max(e1));
            let (base, validity) = match form {
                AsymptoticForm::Standard => (rat(n as i64, 3), "n -> infinity"),
                AsymptoticForm::Tight => {
                    if hi > 2 * lo {
                        return Err(err!(Unsupported, "tight form needs e1 <= e0 <= 2*e1 up to order, got ({e0},{e1})"));
                    }
                    (rat(2 * n as i64, 3), "n -> infinity, e1 <= e0 <= 2*e1")
                }
            };
            let num = three_pow(n) * rat_u(&(pow(e0, e0) * pow(e1, e1)));
            Ok(result(num / rat_pow(&base, e0 + e1), BoundKind::AsymptoticEstimate, validity))
        }
    }
}

/// Generalized sphere packing bound with the default square-root precision.
pub fn gspb_upper(n: usize, k: usize, spec: &ErrorSpec) -> Result<BoundResult> {
    gspb_upper_with_precision(n, k, spec, DEFAULT_SQRT_BITS)
}

/// Generalized sphere packing bound from explicit fractional transversals.
pub fn gspb_upper_with_precision(n: usize, k: usize, spec: &ErrorSpec, sqrt_bits: u32) -> Result<BoundResult> {
    if n == 0 || k == 0 {
        return Err(err!(Domain, "n and k must be positive"));
    }
    match spec {
        ErrorSpec::Sub(s) if s.is_first_channel_single() => {
            s.check(k)?;
            let num = rat_u(&pow(k + 1, n + 1)) - rat_u(&pow(k - 1, n + 1));
            Ok(result(num / rat_int(2 * (n + 1)), BoundKind::ValidUpper, "n >= 1"))
        }
        ErrorSpec::Sub(SubErrorSpec::Total(1)) => {
            if k < 2 {
                return Err(err!(ValidityRange, "k >= 2 required"));
            }
            // (k+1)^n / (2kn/(k+1) - 1) = (k+1)^(n+1) / (2kn - k - 1)
            let den = 2 * k * n - k - 1;
            Ok(result(rat_u(&pow(k + 1, n + 1)) / rat_int(den), BoundKind::ValidUpper, "k >= 2"))
        }
        ErrorSpec::Sub(SubErrorSpec::PerChannel(e)) if k == 2 && e[..] == [1, 1] => {
            if n < 4 {
                return Err(err!(ValidityRange, "n >= 4 required, got n = {n}"));
            }
            let d = (n - 3) * (n - 3);
            Ok(result(three_pow(n) * rat_int(6) / rat_int(d), BoundKind::ValidUpper, "n >= 4"))
        }
        ErrorSpec::Sub(SubErrorSpec::Total(2)) if k == 2 => {
            if n < 48 {
                return Err(err!(ValidityRange, "n >= 48 required, got n = {n}"));
            }
            Ok(result(total_two_gspb(n, sqrt_bits), BoundKind::ValidUpper, "n >= 48"))
        }
        ErrorSpec::Del(_) => {
            if k != 2 {
                return Err(err!(Unsupported, "deletion bounds need k = 2"));
            }
            if n < 2 {
                return Err(err!(ValidityRange, "n >= 2 required, got n = {n}"));
            }
            Ok(result(deletion_gspb(n)?, BoundKind::ValidUpper, "n >= 2, k = 2"))
        }
        _ => Err(err!(Unsupported, "no generalized sphere packing bound for {spec} at k = {k}")),
    }
}

/// `a/(a-1) * 3^n / (8n^2/9 - 2na/3)` with `a = sqrt(8n/6)`, maximised over a bracket of `a`.
fn total_two_gspb(n: usize, bits: u32) -> Rational {
    let (lo, hi) = sqrt_bracket(&BigUint::from(8 * n), &BigUint::from(6u32), bits);
    // the first factor falls with a, the second rises with a
    let first = &lo / (&lo - Rational::one());
    let nn = rat_int(n as i64);
    let den = rat(8, 9) * &nn * &nn - rat(2, 3) * &nn * &hi;
    first * three_pow(n) / den
}

fn deletion_gspb(n: usize) -> Result<Rational> {
    let mut acc = Rational::zero();
    for rho in 1..n {
        for w in 0..n {
            let c = count_runs_weight(n - 1, rho, w)?;
            if c.is_zero() {
                continue;
            }
            acc += rat_u(&(c * count_v(n, w)?)) / rat_int(rho as i64);
        }
    }
    Ok(acc)
}

/// Average ball size over the whole space.
pub fn average_ball(n: usize, k: usize, spec: &ErrorSpec) -> Result<BoundResult> {
    if n == 0 || k == 0 {
        return Err(err!(Domain, "n and k must be positive"));
    }
    let nn = rat_int(n as i64);
    let kk = rat_int(k as i64);
    let one = Rational::one();
    let need_k2 = || if k == 2 { Ok(()) } else { Err(err!(Unsupported, "{spec} average needs k = 2")) };
    let v = match spec {
        ErrorSpec::Sub(s) if s.is_first_channel_single() => {
            s.check(k)?;
            rat_int(2) * &nn / (&kk + &one) + one
        }
        ErrorSpec::Sub(SubErrorSpec::Total(1)) => rat_int(2) * &kk * &nn / (&kk + &one) + one,
        ErrorSpec::Sub(SubErrorSpec::PerChannel(e)) if e[..] == [1, 1] => {
            need_k2()?;
            rat(4, 9) * &nn * &nn + rat(14, 9) * &nn + one
        }
        ErrorSpec::Sub(SubErrorSpec::Total(2)) => {
            need_k2()?;
            rat(8, 9) * &nn * &nn + rat(10, 9) * &nn + one
        }
        ErrorSpec::Del(DelSpec::Radius10) => {
            need_k2()?;
            one + rat(4, 9) * (nn - rat_int(1))
        }
        ErrorSpec::Del(DelSpec::Radius1) => {
            need_k2()?;
            rat_int(2) + rat(8, 9) * (nn - rat_int(1))
        }
        _ => return Err(err!(Unsupported, "no average ball size for {spec} at k = {k}")),
    };
    Ok(result(v, BoundKind::AverageValue, "exact average"))
}

/// Space size over average ball size.
pub fn aspv(n: usize, k: usize, spec: &ErrorSpec) -> Result<BoundResult> {
    let avg = average_ball(n, k, spec)?;
    Ok(result(rat_u(&pow(k + 1, n)) / avg.value, BoundKind::AverageValue, "benchmark, not a bound"))
}

/// Constructive lower bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerMethod {
    /// BCH codes over an alphabet of prime-power size `k+1`.
    Bch,
    /// Product of shortened Hamming cosets, one per flip budget.
    Coset,
    /// Fiber construction with shortened Hamming inner codes.
    Fiber,
    /// Limited-magnitude checksum code, even `k`.
    Lee,
    /// VT code on row 0.
    VtDel,
    /// VT code on the concatenated rows.
    Vt1Del,
    /// Systematic ternary code on row 0.
    TenengoltsDel,
    /// Systematic ternary code protecting both rows.
    Tenengolts1Del,
}

impl LowerMethod {
    pub const ALL: [LowerMethod; 8] = [
        LowerMethod::Bch,
        LowerMethod::Coset,
        LowerMethod::Fiber,
        LowerMethod::Lee,
        LowerMethod::VtDel,
        LowerMethod::Vt1Del,
        LowerMethod::TenengoltsDel,
        LowerMethod::Tenengolts1Del,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LowerMethod::Bch => "bch",
            LowerMethod::Coset => "coset",
            LowerMethod::Fiber => "fiber",
            LowerMethod::Lee => "lee",
            LowerMethod::VtDel => "vt_del",
            LowerMethod::Vt1Del => "vt1_del",
            LowerMethod::TenengoltsDel => "tenengolts_del",
            LowerMethod::Tenengolts1Del => "tenengolts1_del",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == text)
            .ok_or_else(|| err!(InvalidInput, "unknown lower-bound method {text:?}"))
    }
}

fn is_prime_power(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut r = q;
            while r.is_multiple_of(p) {
                r /= p;
            }
            return r == 1;
        }
        p += 1;
    }
    true
}

/// Lower bound from an explicit code family.
pub fn lower_bound(n: usize, k: usize, spec: &ErrorSpec, method: LowerMethod) -> Result<BoundResult> {
    if n == 0 || k == 0 {
        return Err(err!(Domain, "n and k must be positive"));
    }
    let space = rat_u(&pow(k + 1, n));
    let lower = |v: Rational, validity: &str| Ok(result(v, BoundKind::ValidLower, validity));
    let need_del = |want: DelSpec| {
        if k != 2 {
            return Err(err!(Unsupported, "deletion methods need k = 2"));
        }
        if *spec != ErrorSpec::Del(want) {
            return Err(err!(Unsupported, "method {} applies to {} only", method.name(), ErrorSpec::Del(want)));
        }
        Ok(())
    };
    match method {
        LowerMethod::Bch => {
            if !is_prime_power(k + 1) {
                return Err(err!(ValidityRange, "k+1 = {} must be a prime power", k + 1));
            }
            let e = match spec {
                ErrorSpec::Sub(s) => {
                    s.check(k)?;
                    s.total_budget()
                }
                _ => return Err(err!(Unsupported, "bch applies to substitution budgets")),
            };
            if e == 0 {
                return Err(err!(Domain, "budget must be positive"));
            }
            let t = ceil_log(k + 1, n + 1) * (k * (2 * e - 1)).div_ceil(k + 1) + 1;
            lower(space / rat_u(&pow(k + 1, t)), "k+1 prime power")
        }
        LowerMethod::Coset => match spec {
            ErrorSpec::Sub(s @ SubErrorSpec::PerChannel(_)) => {
                s.check(k)?;
                let t = ceil_log(2, n + 1) * s.total_budget();
                lower(space / rat_u(&pow(2, t)), "any n")
            }
            _ => Err(err!(Unsupported, "coset method applies to per-channel budgets")),
        },
        LowerMethod::Fiber => {
            if k < 2 {
                return Err(err!(ValidityRange, "k >= 2 required"));
            }
            match spec {
                ErrorSpec::Sub(s) if s.is_first_channel_single() && s.check(k).is_ok() => {
                    lower(rat_u(&fiber_size(n, k)), "k >= 2")
                }
                _ => Err(err!(Unsupported, "fiber method applies to (1,0,...,0)")),
            }
        }
        LowerMethod::Lee => {
            if k % 2 == 1 {
                return Err(err!(ValidityRange, "k must be even, got k = {k}"));
            }
            if *spec != ErrorSpec::Sub(SubErrorSpec::Total(1)) {
                return Err(err!(Unsupported, "lee method applies to t:1"));
            }
            lower(space / rat_u(&pow(k + 1, ceil_log(k + 1, 2 * n + 1))), "even k")
        }
        LowerMethod::VtDel => {
            need_del(DelSpec::Radius10)?;
            lower(space / rat_int(n as i64 + 1), "k = 2")
        }
        LowerMethod::Vt1Del => {
            need_del(DelSpec::Radius1)?;
            lower(space / rat_int(2 * n as i64 + 1), "k = 2")
        }
        LowerMethod::TenengoltsDel => {
            need_del(DelSpec::Radius10)?;
            lower(space / rat_u(&pow(3, ceil_log(3, n) + 3)), "k = 2")
        }
        LowerMethod::Tenengolts1Del => {
            need_del(DelSpec::Radius1)?;
            lower(space / rat_u(&pow(3, ceil_log(3, 2 * n) + 5)), "k = 2")
        }
    }
}

/// `sum_l C(n,l) (k-1)^(n-l) 2^(l - ceil(log2(l+1)))`.
pub fn fiber_size(n: usize, k: usize) -> BigUint {
    (0..=n)
        .map(|l| binom(n, l) * pow(k - 1, n - l) * pow(2, l - ceil_log(2, l + 1)))
        .sum()
}

/// Tables of bounds, one row per length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// Sphere packing and leading-order estimates at `k = 2`.
    Table1,
    /// Single error at resolution `k`: GSPB and ASPV.
    Table2,
    /// Two errors at `k = 2`: GSPB, ASPV and estimates.
    Table3,
    /// Single deletion: GSPB sum and the two ASPV columns, floored.
    Table4,
    /// Lower and upper bounds for a single error at resolution `k`.
    Summary6,
    /// Lower and upper bounds at `k = 2` for several budgets.
    Summary7,
    /// Lower and upper bounds for a single deletion.
    Summary8,
}

impl TableKind {
    pub const ALL: [TableKind; 7] = [
        TableKind::Table1,
        TableKind::Table2,
        TableKind::Table3,
        TableKind::Table4,
        TableKind::Summary6,
        TableKind::Summary7,
        TableKind::Summary8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableKind::Table1 => "table1",
            TableKind::Table2 => "table2",
            TableKind::Table3 => "table3",
            TableKind::Table4 => "table4",
            TableKind::Summary6 => "summary6",
            TableKind::Summary7 => "summary7",
            TableKind::Summary8 => "summary8",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == text)
            .ok_or_else(|| err!(InvalidInput, "unknown table {text:?}"))
    }
}

/// Free parameters of the parametric tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableParams {
    /// Resolution for the arbitrary-`k` tables.
    pub k: usize,
    /// Total budget for the general-`e` rows.
    pub e: usize,
    /// Per-channel budget for the general `(e0,e1)` rows.
    pub e0: usize,
    pub e1: usize,
}

impl Default for TableParams {
    fn default() -> Self {
        Self { k: 2, e: 4, e0: 2, e1: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

fn cell(r: Result<BoundResult>) -> String {
    r.map(|b| b.value.to_string()).unwrap_or_default()
}

fn floor_cell(r: Result<BoundResult>) -> String {
    r.map(|b| b.value_floor.to_string()).unwrap_or_default()
}

fn sub(e: &[usize]) -> ErrorSpec {
    ErrorSpec::Sub(SubErrorSpec::PerChannel(e.to_vec()))
}

fn tot(e: usize) -> ErrorSpec {
    ErrorSpec::Sub(SubErrorSpec::Total(e))
}

/// Column names of a table.
pub fn table_header(kind: TableKind, p: &TableParams) -> Vec<String> {
    let cols: Vec<String> = match kind {
        TableKind::Table1 => vec![
            "n".into(),
            alloc::format!("sphere_packing_({},{})", p.e0, p.e1),
            alloc::format!("asymptotic_({},{})", p.e0, p.e1),
            alloc::format!("sphere_packing_t{}", p.e),
            alloc::format!("asymptotic_t{}", p.e),
        ],
        TableKind::Table2 => ["n", "k", "gspb_first_channel", "aspv_first_channel", "gspb_t1", "aspv_t1"]
            .map(String::from)
            .to_vec(),
        TableKind::Table3 => ["n", "gspb_(1,1)", "aspv_(1,1)", "asymptotic_(1,1)", "gspb_t2", "aspv_t2", "asymptotic_t2"]
            .map(String::from)
            .to_vec(),
        TableKind::Table4 => ["n", "gspb_d10", "aspv_d10", "aspv_d1"].map(String::from).to_vec(),
        TableKind::Summary6 => ["n", "k", "lower_first_channel", "upper_first_channel", "lower_t1", "upper_t1"]
            .map(String::from)
            .to_vec(),
        TableKind::Summary7 => vec![
            "n".into(),
            "lower_(1,1)".into(),
            "upper_(1,1)".into(),
            "lower_t2".into(),
            "upper_t2".into(),
            alloc::format!("lower_t{}", p.e),
            alloc::format!("asymptotic_t{}", p.e),
            alloc::format!("lower_({},{})", p.e0, p.e1),
            alloc::format!("asymptotic_({},{})", p.e0, p.e1),
        ],
        TableKind::Summary8 => ["n", "lower_d10", "upper_d10", "lower_d1", "upper_d1"].map(String::from).to_vec(),
    };
    cols
}

/// One row of a table; cells outside a formula's validity range are empty.
pub fn table_row(kind: TableKind, n: usize, p: &TableParams) -> Vec<String> {
    use AsymptoticForm::Standard;
    let pair = SubErrorSpec::PerChannel(vec![p.e0, p.e1]);
    let first = ErrorSpec::Sub(SubErrorSpec::first_channel(p.k));
    let d10 = ErrorSpec::Del(DelSpec::Radius10);
    let d1 = ErrorSpec::Del(DelSpec::Radius1);
    let mut row = vec![n.to_string()];
    match kind {
        TableKind::Table1 => {
            row.push(cell(sphere_packing_upper(n, &pair)));
            row.push(cell(asymptotic_upper(n, &pair, Standard)));
            row.push(cell(sphere_packing_upper(n, &SubErrorSpec::Total(p.e))));
            row.push(cell(asymptotic_upper(n, &SubErrorSpec::Total(p.e), Standard)));
        }
        TableKind::Table2 => {
            row.push(p.k.to_string());
            row.push(cell(gspb_upper(n, p.k, &first)));
            row.push(cell(aspv(n, p.k, &first)));
            row.push(cell(gspb_upper(n, p.k, &tot(1))));
            row.push(cell(aspv(n, p.k, &tot(1))));
        }
        TableKind::Table3 => {
            let one_one = SubErrorSpec::PerChannel(vec![1, 1]);
            row.push(cell(gspb_upper(n, 2, &sub(&[1, 1]))));
            row.push(cell(aspv(n, 2, &sub(&[1, 1]))));
            row.push(cell(asymptotic_upper(n, &one_one, Standard)));
            row.push(cell(gspb_upper(n, 2, &tot(2))));
            row.push(cell(aspv(n, 2, &tot(2))));
            row.push(cell(asymptotic_upper(n, &SubErrorSpec::Total(2), Standard)));
        }
        TableKind::Table4 => {
            row.push(floor_cell(gspb_upper(n, 2, &d10)));
            row.push(floor_cell(aspv(n, 2, &d10)));
            row.push(floor_cell(aspv(n, 2, &d1)));
        }
        TableKind::Summary6 => {
            row.push(p.k.to_string());
            row.push(cell(lower_bound(n, p.k, &first, LowerMethod::Fiber)));
            row.push(cell(gspb_upper(n, p.k, &first)));
            row.push(cell(lower_bound(n, p.k, &tot(1), LowerMethod::Lee)));
            row.push(cell(gspb_upper(n, p.k, &tot(1))));
        }
        TableKind::Summary7 => {
            row.push(cell(lower_bound(n, 2, &sub(&[1, 1]), LowerMethod::Coset)));
            row.push(cell(gspb_upper(n, 2, &sub(&[1, 1]))));
            row.push(cell(lower_bound(n, 2, &tot(2), LowerMethod::Bch)));
            row.push(cell(gspb_upper(n, 2, &tot(2))));
            row.push(cell(lower_bound(n, 2, &tot(p.e), LowerMethod::Bch)));
            row.push(cell(asymptotic_upper(n, &SubErrorSpec::Total(p.e), Standard)));
            row.push(cell(lower_bound(n, 2, &sub(&[p.e0, p.e1]), LowerMethod::Coset)));
            row.push(cell(asymptotic_upper(n, &pair, Standard)));
        }
        TableKind::Summary8 => {
            row.push(cell(lower_bound(n, 2, &d10, LowerMethod::VtDel)));
            row.push(cell(gspb_upper(n, 2, &d10)));
            row.push(cell(lower_bound(n, 2, &d1, LowerMethod::Vt1Del)));
            // a code for either row is also a code for row 0
            row.push(cell(gspb_upper(n, 2, &d10)));
        }
    }
    row
}

/// Whole table over a range of lengths.
pub fn emit_bound_table(kind: TableKind, n_range: RangeInclusive<usize>, params: &TableParams) -> BoundTable {
    BoundTable { header: table_header(kind, params), rows: n_range.map(|n| table_row(kind, n, params)).collect() }
}

/// Binomial-sum inequalities behind the fractional-transversal bounds.
pub mod lemmas {
    use super::*;

    fn half_odd(k: usize) -> Rational {
        rat(k as i64 - 1, 2)
    }

    /// `sum_m C(n,m) ((k-1)/2)^m / (n+m-j)`.
    pub fn shifted_weight_sum(n: usize, k: usize, j: usize) -> Rational {
        let x = half_odd(k);
        (0..=n)
            .filter(|&m| n + m > j)
            .map(|m| rat_u(&binom(n, m)) * rat_pow(&x, m) / rat_int((n + m - j) as i64))
            .sum()
    }

    fn scaled_space(n: usize, k: usize) -> Rational {
        rat_pow(&rat(k as i64 + 1, 2), n)
    }

    /// `((k+1)/2)^n / (2kn/(k+1) - shift)`.
    pub fn shifted_weight_bound(n: usize, k: usize, shift: usize) -> Rational {
        scaled_space(n, k) / (rat(2 * (k * n) as i64, k as i64 + 1) - rat_int(shift as i64))
    }

    /// `sum_{m >= 1} C(n,m) ((k-1)/2)^m / m`.
    pub fn inverse_count_sum(n: usize, k: usize) -> Rational {
        let x = half_odd(k);
        (1..=n).map(|m| rat_u(&binom(n, m)) * rat_pow(&x, m) / rat_int(m as i64)).sum()
    }

    /// `((k+1)/2)^n / ((k-1)n/(k+1) - 1)`.
    pub fn inverse_count_bound(n: usize, k: usize) -> Rational {
        scaled_space(n, k) / (rat(((k - 1) * n) as i64, k as i64 + 1) - Rational::one())
    }

    /// `sum_m C(n,m) sum_j C(n-m,j) / ((j+1)(n-m-j+1))`.
    pub fn double_harmonic_sum(n: usize) -> Rational {
        let mut acc = Rational::zero();
        for m in 0..=n {
            let mut inner = Rational::zero();
            for j in 0..=n - m {
                inner += rat_u(&binom(n - m, j)) / rat_int(((j + 1) * (n - m - j + 1)) as i64);
            }
            acc += rat_u(&binom(n, m)) * inner;
        }
        acc
    }

    /// `3^(n+2) / ((n+1)(n+2))`.
    pub fn double_harmonic_bound(n: usize) -> Rational {
        rat_u(&pow(3, n + 2)) / rat_int(((n + 1) * (n + 2)) as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Rational {
        rat_int(v)
    }

    #[test]
    fn sphere_packing_examples() {
        assert_eq!(sphere_packing_upper(4, &SubErrorSpec::Total(1)).unwrap().value, rat(81, 4));
        assert_eq!(sphere_packing_upper(5, &SubErrorSpec::PerChannel(vec![2, 1])).unwrap().value, rat(243, 5));
        assert!(sphere_packing_upper(2, &SubErrorSpec::Total(3)).is_err());
    }

    #[test]
    fn asymptotic_examples() {
        let v = asymptotic_upper(30, &SubErrorSpec::PerChannel(vec![1, 1]), AsymptoticForm::Standard).unwrap();
        assert_eq!(v.value, three_pow(30) / int(100));
        assert_eq!(v.kind, BoundKind::AsymptoticEstimate);
        let v = asymptotic_upper(30, &SubErrorSpec::Total(2), AsymptoticForm::Standard).unwrap();
        assert_eq!(v.value, three_pow(30) / int(400));
        let v = asymptotic_upper(48, &SubErrorSpec::PerChannel(vec![2, 1]), AsymptoticForm::Tight).unwrap();
        assert_eq!(v.value, three_pow(48) * int(4) / int(32 * 32 * 32));
        assert!(asymptotic_upper(30, &SubErrorSpec::Total(3), AsymptoticForm::Standard).is_err());
        assert!(asymptotic_upper(30, &SubErrorSpec::PerChannel(vec![3, 1]), AsymptoticForm::Tight).is_err());
    }

    #[test]
    fn gspb_examples() {
        let d10 = ErrorSpec::Del(DelSpec::Radius10);
        assert_eq!(gspb_upper(2, 2, &d10).unwrap().value, int(7));
        assert_eq!(gspb_upper(10, 2, &d10).unwrap().value_floor, BigInt::from(23329));
        assert_eq!(gspb_upper(2, 2, &sub(&[1, 0])).unwrap().value, rat(26, 6));
        assert_eq!(gspb_upper(3, 2, &tot(1)).unwrap().value, int(9));
        assert!(matches!(gspb_upper(3, 2, &sub(&[1, 1])), Err(crate::Error::ValidityRange(_))));
        assert!(matches!(gspb_upper(47, 2, &tot(2)), Err(crate::Error::ValidityRange(_))));
        assert!(gspb_upper(3, 3, &d10).is_err());
    }

    #[test]
    fn total_two_bracket_is_conservative() {
        let coarse = gspb_upper_with_precision(48, 2, &tot(2), 8).unwrap().value;
        let fine = gspb_upper_with_precision(48, 2, &tot(2), 80).unwrap().value;
        assert!(coarse >= fine);
        // the f64 evaluation sits just below the exact bracket end
        let a = libm::sqrt(8.0 * 48.0 / 6.0);
        let approx = a / (a - 1.0) / (8.0 * 48.0 * 48.0 / 9.0 - 2.0 * 48.0 * a / 3.0);
        let exact: f64 = num_traits::ToPrimitive::to_f64(&(fine / three_pow(48))).unwrap();
        assert!((exact - approx).abs() / approx < 1e-12);
    }

    #[test]
    fn average_examples() {
        assert_eq!(average_ball(1, 2, &sub(&[1, 0])).unwrap().value, rat(5, 3));
        assert_eq!(average_ball(2, 2, &ErrorSpec::Del(DelSpec::Radius10)).unwrap().value, rat(13, 9));
        for n in 1..=12 {
            let a = average_ball(n, 2, &ErrorSpec::Del(DelSpec::Radius10)).unwrap().value;
            let b = average_ball(n, 2, &ErrorSpec::Del(DelSpec::Radius1)).unwrap().value;
            assert_eq!(b, a * int(2));
        }
        let v = aspv(2, 2, &ErrorSpec::Del(DelSpec::Radius10)).unwrap();
        assert_eq!(v.value, rat(81, 13));
        assert_eq!(v.value_floor, BigInt::from(6));
        assert_eq!(aspv(10, 2, &ErrorSpec::Del(DelSpec::Radius1)).unwrap().value_floor, BigInt::from(5904));
        assert_eq!(aspv(3, 2, &tot(1)).unwrap().value, rat(27, 5));
    }

    #[test]
    fn lower_examples() {
        let d10 = ErrorSpec::Del(DelSpec::Radius10);
        let d1 = ErrorSpec::Del(DelSpec::Radius1);
        let v = lower_bound(4, 2, &d10, LowerMethod::VtDel).unwrap();
        assert_eq!((v.value, v.value_floor), (rat(81, 5), BigInt::from(16)));
        assert_eq!(lower_bound(9, 2, &d1, LowerMethod::Tenengolts1Del).unwrap().value, int(3));
        assert_eq!(lower_bound(3, 2, &sub(&[1, 0]), LowerMethod::Fiber).unwrap().value, int(9));
        assert!(lower_bound(3, 3, &tot(1), LowerMethod::Lee).is_err());
        assert!(lower_bound(3, 5, &tot(1), LowerMethod::Bch).is_err());
        assert!(lower_bound(3, 2, &tot(1), LowerMethod::Coset).is_err());
        assert_eq!(lower_bound(3, 2, &sub(&[1, 1]), LowerMethod::Coset).unwrap().value, rat(27, 16));
        assert!(lower_bound(3, 2, &d1, LowerMethod::VtDel).is_err());
        assert!(is_prime_power(4) && is_prime_power(9) && !is_prime_power(6));
    }

    #[test]
    fn table_four_rows() {
        let t = emit_bound_table(TableKind::Table4, 2..=10, &TableParams::default());
        let col = |c: usize| t.rows.iter().map(|r| r[c].clone()).collect::<Vec<_>>().join(" ");
        assert_eq!(col(1), "7 18 47 129 357 1001 2836 8106 23329");
        assert_eq!(col(2), "6 14 34 87 226 596 1595 4320 11809");
        assert_eq!(col(3), "3 7 17 43 113 298 797 2160 5904");
    }
}
