use composite_codec_core::bounds::lemmas::*;

#[test]
fn mean_reciprocal_sandwich() {
    for k in [2, 3, 4, 8] {
        for n in 4..=64 {
            let s = shifted_weight_sum(n, k, 0);
            assert!(shifted_weight_bound(n, k, 0) <= s, "k={k} n={n}");
            assert!(s <= shifted_weight_bound(n, k, 1), "k={k} n={n}");
        }
    }
}

#[test]
fn shifted_reciprocal_bound() {
    let mut failures = Vec::new();
    for n in 10..=64usize {
        for j in 1..=n.isqrt() {
            if shifted_weight_sum(n, 2, j) > shifted_weight_bound(n, 2, j + 1) {
                failures.push((n, j));
            }
        }
    }
    assert!(failures.is_empty(), "fails at {failures:?}");
}

#[test]
fn inverse_count_bound_holds() {
    for k in [2, 3, 4, 8] {
        for n in 4..=64 {
            assert!(inverse_count_sum(n, k) <= inverse_count_bound(n, k), "k={k} n={n}");
        }
    }
}

#[test]
fn double_harmonic_bound_holds() {
    for n in 0..=20 {
        assert!(double_harmonic_sum(n) <= double_harmonic_bound(n), "n={n}");
    }
}
