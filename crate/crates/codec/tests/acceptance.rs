//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach stdout.
//! Exits non-zero when any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use composite_codec::run;
use composite_codec_core::alphabet::{
    all_binary, all_sequences, decompose_letter, decompose_letters, reconstruct_column, reconstruct_letters,
    CompositeLetter, CompositeParams,
};
use composite_codec_core::arith::{binom, rat_int};
use composite_codec_core::balls::{
    del_ball_size, enumerate_del_ball, enumerate_sub_ball, runs, single_insertions, sub_ball_size, EnumCaps,
};
use composite_codec_core::bounds::lemmas::*;
use composite_codec_core::bounds::{gspb_upper, lower_bound, sphere_packing_upper, BoundKind, LowerMethod};
use composite_codec_core::capacity::*;
use composite_codec_core::counting::{count_runs_weight, count_v, vertex_set_size_10};
use composite_codec_core::deletion::*;
use composite_codec_core::oracle::*;
use composite_codec_core::substitution::*;
use composite_codec_core::{CompositeSeq, DelSpec, ErrorSpec, RowTuple, SubErrorSpec};
use num_bigint::BigUint;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> Result<String, String> {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("composite-codec").chain(args.iter().copied()), &mut out, &mut err);
    if code != 0 {
        return Err(format!("exit {code}: {}", String::from_utf8_lossy(&err)));
    }
    Ok(String::from_utf8(out).unwrap())
}

fn deletion_table() -> Outcome {
    let text = cli(&["--format", "csv", "bounds", "--table", "table4", "--n-max", "10"])?;
    let gspb = [7u64, 18, 47, 129, 357, 1001, 2836, 8106, 23329];
    let aspv10 = [6u64, 14, 34, 87, 226, 596, 1595, 4320, 11809];
    let aspv1 = [3u64, 7, 17, 43, 113, 298, 797, 2160, 5904];
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<Vec<u64>> = reader
        .records()
        .map(|r| r.unwrap().iter().map(|c| c.parse().unwrap()).collect())
        .collect();
    ensure(rows.len() == 9, || format!("{} rows", rows.len()))?;
    let mut matched = 0;
    for (i, row) in rows.iter().enumerate() {
        let want = [i as u64 + 2, gspb[i], aspv10[i], aspv1[i]];
        ensure(row[..] == want[..], || format!("row {i}: got {row:?}, want {want:?}"))?;
        matched += 3;
    }
    Ok(format!("{matched} integers match"))
}

fn ball_formula_vs_enumeration() -> Outcome {
    let mut specs = vec![SubErrorSpec::Total(1), SubErrorSpec::Total(2)];
    for e0 in 0..=3 {
        for e1 in 0..=3 - e0 {
            specs.push(SubErrorSpec::PerChannel(vec![e0, e1]));
        }
    }
    let caps = EnumCaps { max_len_total: 6, max_len_per_channel: 6 };
    let mut checked = 0usize;
    for n in 1..=6 {
        for s in all_sequences(2, n) {
            for spec in &specs {
                let formula = sub_ball_size(&s, spec, false).map_err(|e| format!("{s} {spec}: {e}"))?.value;
                let count = enumerate_sub_ball(&s, spec, &caps).map_err(|e| e.to_string())?.len();
                ensure(formula == BigUint::from(count), || format!("{s} {spec}: formula {formula}, enumerated {count}"))?;
                checked += 1;
            }
        }
    }
    for n in 1..=8 {
        for s in all_sequences(2, n) {
            for d in [DelSpec::Radius10, DelSpec::Radius1] {
                let (a, b) = (del_ball_size(&s, d).unwrap(), enumerate_del_ball(&s, d).unwrap().len());
                ensure(a == b, || format!("{s} {d:?}: {a} vs {b}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (sequence, spec) pairs"))
}

fn worked_examples() -> Outcome {
    // ternary base, resolution 2
    let p = CompositeParams::new(3, 2).unwrap();
    let l = |c: [usize; 3]| CompositeLetter::new(c.to_vec());
    ensure(decompose_letter(&p, &l([1, 0, 1])).unwrap() == vec![0, 2], || "D(phi4) != [0 2]".into())?;
    ensure(reconstruct_column(&p, &[1, 0]).unwrap().is_none(), || "R([1 0]) is not '?'".into())?;
    let phi = [l([2, 0, 0]), l([0, 2, 0]), l([0, 0, 2]), l([1, 1, 0]), l([1, 0, 1]), l([0, 1, 1])];
    let rows = decompose_letters(&p, &phi).unwrap();
    ensure(rows == RowTuple::parse(&["012001", "012122"]).unwrap(), || format!("got {rows}"))?;
    let back: Vec<_> = reconstruct_letters(&p, &rows).unwrap().into_iter().map(Option::unwrap).collect();
    ensure(back == phi, || "ternary round trip".into())?;

    // binary base, resolution 4, through the CLI
    let out = cli(&["decompose", "--k", "4", "012340"])?;
    ensure(out == "000010\n000110\n001110\n011110\n", || format!("decompose printed {out:?}"))?;
    let out = cli(&["reconstruct", "000010", "000110", "001110", "011110"])?;
    ensure(out == "012340\n", || format!("reconstruct printed {out:?}"))?;
    let out = cli(&["reconstruct", "000010", "000110", "011110", "010110"])?;
    ensure(out == "02?340\n", || format!("faulty reconstruction printed {out:?}"))?;
    let p4 = CompositeParams::binary(4).unwrap();
    ensure(decompose_letter(&p4, &CompositeLetter::binary(4, 2)).unwrap() == vec![0, 0, 1, 1], || "D(2)".into())?;

    let zeros = "0".repeat(30);
    let out = cli(&["ball", "--k", "2", "--spec", "(1,0)", "--size", &zeros])?;
    ensure(out == "1\n", || format!("ball of 0^30 printed {out:?}"))?;
    let s = "012".repeat(10);
    let out = cli(&["ball", "--k", "2", "--spec", "(1,0)", "--size", &s])?;
    ensure(out == "21\n", || format!("ball of (012)^10 printed {out:?}"))?;
    Ok("both examples, '02?340', ball sizes 1 and 21".into())
}

fn clean(what: &str, report: DecodeReport) -> Result<usize, String> {
    ensure(report.codewords > 0, || format!("{what}: empty code"))?;
    ensure(report.passed(), || format!("{what}: {} failures, first {:?}", report.failures.len(), report.failures[0]))?;
    Ok(report.outcomes)
}

fn identity(code: Vec<CompositeSeq>) -> impl Iterator<Item = (CompositeSeq, CompositeSeq)> {
    code.into_iter().map(|c| (c.clone(), c))
}

fn tuple(r: &[Vec<u8>]) -> RowTuple {
    RowTuple::new(r.to_vec()).unwrap()
}

fn decoders() -> Outcome {
    let mut outcomes = 0;
    let codes = vec![BinaryCode::hamming_coset(7, 0).unwrap(), BinaryCode::hamming_coset(7, 0).unwrap()];
    let u = ErrorUniverse::Substitutions(SubErrorSpec::PerChannel(vec![1, 1]));
    let code = c1_codewords(2, 7, &codes).unwrap();
    outcomes += clean("c1", exhaustive_decode_check(identity(code), &u, |r| c1_decode(&tuple(r), &codes)).unwrap())?;

    for k in 2..=3 {
        for n in 1..=5 {
            for inner in [InnerCodes::hamming(n), optimal_inner_codes(n, &OracleCaps::default()).unwrap()] {
                let u = ErrorUniverse::Substitutions(SubErrorSpec::first_channel(k));
                let code = c2_codewords(k, n, &inner).unwrap();
                let r = exhaustive_decode_check(identity(code), &u, |r| c2_decode(&tuple(r), &inner)).unwrap();
                outcomes += clean(&format!("c2 k={k} n={n}"), r)?;
            }
        }
    }

    for n in 1..=5 {
        for a in 0..=2 * n {
            let lee = LeeCode::new(n, 4, a).unwrap();
            let u = ErrorUniverse::Substitutions(SubErrorSpec::Total(1));
            let r = exhaustive_decode_check(identity(lee.codewords()), &u, |r| lee.decode(&tuple(r))).unwrap();
            outcomes += clean(&format!("Lee n={n} a={a}"), r)?;
        }
    }

    for n in 1..=8 {
        for a in 0..=n {
            let u = ErrorUniverse::Deletions(DelSpec::Radius10);
            let r = exhaustive_decode_check(identity(c3_codewords(n, a)), &u, |r| c3_decode(&r[0], &r[1], a)).unwrap();
            outcomes += clean(&format!("c3 n={n} a={a}"), r)?;
        }
    }

    for m in 1..=5 {
        let cases: Vec<_> = all_sequences(2, m).map(|s| (s.clone(), c4_encode(&s).unwrap())).collect();
        let u = ErrorUniverse::Deletions(DelSpec::Radius10);
        outcomes += clean(&format!("c4 m={m}"), exhaustive_decode_check(cases, &u, |r| c4_decode(&r[0], &r[1])).unwrap())?;
    }

    for n in 1..=6 {
        for a in 0..=2 * n {
            let code = c5_codewords(n, a);
            if code.is_empty() {
                continue;
            }
            let u = ErrorUniverse::Deletions(DelSpec::Radius1);
            let r = exhaustive_decode_check(identity(code), &u, |r| c5_decode(&r[0], &r[1], a)).unwrap();
            outcomes += clean(&format!("c5 n={n} a={a}"), r)?;
        }
    }

    for m in 1..=4 {
        let cases: Vec<_> = all_sequences(2, m).map(|s| (s.clone(), c6_encode(&s).unwrap())).collect();
        let u = ErrorUniverse::Deletions(DelSpec::Radius1);
        outcomes += clean(&format!("c6 m={m}"), exhaustive_decode_check(cases, &u, |r| c6_decode(&r[0], &r[1])).unwrap())?;
    }
    Ok(format!("{outcomes} channel outcomes decoded, 0 failures"))
}

fn optimality() -> Outcome {
    let caps = OracleCaps::default();
    let mut sizes = Vec::new();
    for n in 2..=4 {
        let inner = optimal_inner_codes(n, &caps).unwrap();
        let built = c2_size(n, 2, &inner).unwrap();
        let (opt, _) = optimal_code_size(n, 2, &ErrorSpec::parse("(1,0)").unwrap(), &caps).unwrap();
        ensure(built == BigUint::from(opt), || format!("n={n}: construction {built}, optimum {opt}"))?;
        sizes.push(opt);
    }
    Ok(format!("sizes {sizes:?} for n = 2..4"))
}

fn sandwich() -> Outcome {
    let caps = OracleCaps::default();
    let mut instances = vec![];
    for text in ["(1,0)", "(0,1)", "t:1", "(1,1)", "(2,0)", "t:2", "d:(1,0)", "d:1"] {
        for n in 1..=4 {
            instances.push((2, n, text));
        }
    }
    for text in ["(1,0,0)", "t:1"] {
        for n in 1..=3 {
            instances.push((3, n, text));
        }
    }
    let mut comparisons = 0;
    for &(k, n, text) in &instances {
        let spec = ErrorSpec::parse(text).unwrap();
        let opt = rat_int(optimal_code_size(n, k, &spec, &caps).unwrap().0 as i64);
        let mut uppers = Vec::new();
        if let ErrorSpec::Sub(s) = &spec {
            if k == 2 {
                uppers.extend(sphere_packing_upper(n, s).ok());
            }
        }
        uppers.extend(gspb_upper(n, k, &spec).ok());
        for u in uppers.into_iter().filter(|u| u.kind == BoundKind::ValidUpper) {
            ensure(opt <= u.value, || format!("k={k} {text} n={n}: optimum {opt} above upper {}", u.value))?;
            comparisons += 1;
        }
        for m in LowerMethod::ALL {
            if let Ok(l) = lower_bound(n, k, &spec, m) {
                if l.kind == BoundKind::ValidLower {
                    ensure(l.value <= opt, || format!("k={k} {text} n={n}: {} lower {} above {opt}", m.name(), l.value))?;
                    comparisons += 1;
                }
            }
        }
    }
    Ok(format!("{} instances, {comparisons} comparisons", instances.len()))
}

fn transversals() -> Outcome {
    let caps = OracleCaps::default();
    let mut checked = 0;
    let mut check = |n: usize, k: usize, text: &str, rule: WeightRule| -> Result<(), String> {
        let r = check_fractional_transversal(n, k, &ErrorSpec::parse(text).unwrap(), rule, &caps).unwrap();
        checked += 1;
        ensure(r.valid, || format!("{rule:?} k={k} {text} n={n}: min ball weight {}", r.min_sum))
    };
    for n in 1..=4 {
        for k in 2..=3 {
            let first = if k == 2 { "(1,0)" } else { "(1,0,0)" };
            check(n, k, first, WeightRule::FirstChannel)?;
            check(n, k, "t:1", WeightRule::TotalOne)?;
        }
        check(n, 2, "(1,1)", WeightRule::PairOneOne)?;
        check(n, 2, "t:2", WeightRule::TotalTwo)?;
    }
    // the received row is empty at n = 1, where 1/runs is undefined
    for n in 2..=6 {
        check(n, 2, "d:(1,0)", WeightRule::DeletionRuns)?;
    }
    Ok(format!("{checked} weightings valid"))
}

fn weight(x: &[u8]) -> usize {
    x.iter().filter(|&&b| b == 1).count()
}

fn counting() -> Outcome {
    for n in 1..=7 {
        for y0 in all_binary(n - 1) {
            let supers = single_insertions(&y0, 2);
            let brute = all_binary(n).filter(|s1| supers.iter().any(|s0| s0.iter().zip(s1).all(|(a, b)| a <= b))).count();
            ensure(count_v(n, weight(&y0)).unwrap() == BigUint::from(brute), || format!("V n={n} y0={y0:?}"))?;
        }
        let mut seen = BTreeSet::new();
        for s0 in all_binary(n) {
            for s1 in all_binary(n) {
                if s0.iter().zip(&s1).all(|(a, b)| a <= b) {
                    for i in 0..n {
                        let mut y0 = s0.clone();
                        y0.remove(i);
                        seen.insert((y0, s1.clone()));
                    }
                }
            }
        }
        ensure(vertex_set_size_10(n).unwrap() == BigUint::from(seen.len()), || format!("vertex set n={n}"))?;
    }
    for n in 1..=12 {
        let mut table = vec![vec![0u64; n + 1]; n + 1];
        for x in all_binary(n) {
            table[runs(&x).unwrap()][weight(&x)] += 1;
        }
        for rho in 1..=n {
            for w in 0..=n {
                ensure(count_runs_weight(n, rho, w).unwrap() == BigUint::from(table[rho][w]), || {
                    format!("N n={n} rho={rho} w={w}")
                })?;
            }
        }
        for w in 1..n {
            let lhs: BigUint = (2..=n).map(|rho| BigUint::from(rho) * count_runs_weight(n, rho, w).unwrap()).sum();
            let rhs = binom(n, w) + BigUint::from(2 * (n - 1)) * binom(n - 2, w - 1);
            ensure(lhs == rhs, || format!("run-sum identity n={n} w={w}"))?;
        }
    }
    Ok("V and vertex set to n=7, run counts and run-sum identity to n=12".into())
}

fn capacity_anchors() -> Outcome {
    let log2_3 = 3f64.log2();
    let (_, c0) = optimize_alpha(&ChannelSpec::new(0.0).unwrap(), DEFAULT_TOL).unwrap();
    ensure((c0 - log2_3).abs() <= 1e-9, || format!("cap(C)(0) = {c0}"))?;
    let c2 = cap_c2(0.0).unwrap();
    ensure((c2 - 1.0).abs() <= 1e-9, || format!("cap(C2)(0) = {c2}"))?;
    let (_, half) = optimize_alpha(&ChannelSpec::new(0.5).unwrap(), DEFAULT_TOL).unwrap();
    ensure(half.abs() <= 1e-9, || format!("cap(C)(1/2) = {half}"))?;
    let mut worst = 0f64;
    for i in 1..=9 {
        let p = 0.05 * i as f64;
        let spec = ChannelSpec::new(p).unwrap();
        let (_, golden) = optimize_alpha(&spec, DEFAULT_TOL).unwrap();
        let (ba, _) = blahut_arimoto(&matrix_rows(&spec), BA_TOL, BA_MAX_ITER);
        worst = worst.max((golden - ba).abs());
        ensure((golden - ba).abs() <= 1e-6, || format!("p={p}: golden {golden}, Blahut-Arimoto {ba}"))?;
    }
    Ok(format!("endpoints exact to 1e-9, max oracle gap {worst:.1e} bits"))
}

fn lemmas() -> Outcome {
    let mut checks = 0;
    for k in [2, 3, 4, 8] {
        for n in 4..=64 {
            let s = shifted_weight_sum(n, k, 0);
            ensure(shifted_weight_bound(n, k, 0) <= s && s <= shifted_weight_bound(n, k, 1), || {
                format!("mean reciprocal sandwich k={k} n={n}")
            })?;
            ensure(inverse_count_sum(n, k) <= inverse_count_bound(n, k), || format!("inverse count k={k} n={n}"))?;
            checks += 3;
        }
    }
    for n in 10..=64usize {
        for j in 1..=n.isqrt() {
            ensure(shifted_weight_sum(n, 2, j) <= shifted_weight_bound(n, 2, j + 1), || format!("shifted n={n} j={j}"))?;
            checks += 1;
        }
    }
    for n in 0..=20 {
        ensure(double_harmonic_sum(n) <= double_harmonic_bound(n), || format!("double harmonic n={n}"))?;
        checks += 1;
    }
    Ok(format!("{checks} exact inequalities"))
}

struct Criterion {
    id: usize,
    name: &'static str,
    budget: Duration,
    check: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "single-deletion bound table bit-exact", budget: Duration::from_secs(1), check: deletion_table },
        Criterion { id: 2, name: "ball formula equals enumeration", budget: Duration::from_secs(120), check: ball_formula_vs_enumeration },
        Criterion { id: 3, name: "worked-example goldens", budget: Duration::MAX, check: worked_examples },
        Criterion { id: 4, name: "decoder exhaustiveness", budget: Duration::from_secs(600), check: decoders },
        Criterion { id: 5, name: "fiber construction attains the optimum", budget: Duration::MAX, check: optimality },
        Criterion { id: 6, name: "bound sandwich", budget: Duration::MAX, check: sandwich },
        Criterion { id: 7, name: "fractional-transversal validity", budget: Duration::MAX, check: transversals },
        Criterion { id: 8, name: "counting identities", budget: Duration::MAX, check: counting },
        Criterion { id: 9, name: "capacity anchors and oracle agreement", budget: Duration::from_secs(30), check: capacity_anchors },
        Criterion { id: 10, name: "binomial-sum inequality lemmas", budget: Duration::MAX, check: lemmas },
    ];
    std::panic::set_hook(Box::new(|info| eprintln!("{info}")));
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(c.check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > c.budget => Err(format!("{detail}, but took {elapsed:.2?} (budget {:?})", c.budget)),
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS [{:>2}] {}: {detail} ({elapsed:.2?})", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL [{:>2}] {}: {why} ({elapsed:.2?})", c.id, c.name);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
