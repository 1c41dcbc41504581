//! h-vectors and counts checked against closed forms computed here from
//! first principles.

use edgering::classify::{classify, HFlags};
use edgering::closure::gorenstein_closure;
use edgering::graph::named::*;
use edgering::hilbert::{h_vector, monomial_count, HilbertOptions, Window};
use edgering::{Graph, HVector, Limits, WideHVector};

fn binom(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn h(g: &Graph) -> Vec<i64> {
    let h: HVector = h_vector(g, &HilbertOptions::default()).unwrap();
    h.coefficients().to_vec()
}

/// `h_i = C(m-1, i)^2` for `K_{m,m}`, the Segre product of two projective
/// spaces of dimension `m - 1`.
fn complete_bipartite_h(m: u64) -> Vec<i64> {
    (0..m).map(|i| binom(m - 1, i).pow(2)).collect()
}

#[test]
fn even_cycles_have_all_ones_h_vectors() {
    for n in 2..=6 {
        assert_eq!(h(&cycle(2 * n)), vec![1; n], "C{}", 2 * n);
    }
}

#[test]
fn complete_bipartite_matches_segre_formula() {
    for m in 1..=5 {
        assert_eq!(h(&complete_bipartite(m, m)), complete_bipartite_h(m as u64), "K{m},{m}");
    }
    assert_eq!(h(&complete_bipartite(3, 3)), vec![1, 4, 1]);
    assert_eq!(h(&complete_bipartite(4, 4)), vec![1, 9, 9, 1]);
}

#[test]
fn complete_bipartite_counts_are_products_of_simplex_counts() {
    for (a, b) in [(2, 3), (3, 3), (2, 5)] {
        let g = complete_bipartite(a, b);
        for k in 0..5u64 {
            let expect = binom(k + a as u64 - 1, a as u64 - 1) * binom(k + b as u64 - 1, b as u64 - 1);
            assert_eq!(monomial_count(&g, k as usize, 1 << 24).unwrap() as i64, expect);
        }
    }
}

#[test]
fn square_counts_are_perfect_squares() {
    let c4 = cycle(4);
    for k in 0..8 {
        assert_eq!(monomial_count(&c4, k, 1 << 20).unwrap(), ((k + 1) * (k + 1)) as u64);
    }
}

#[test]
fn cube_h_vector_and_closure() {
    let q3 = cube();
    assert_eq!(h(&q3), vec![1, 5, 9, 1]);
    let bip = q3.bipartition().unwrap();
    let r = gorenstein_closure(&q3, &bip, &Limits::default()).unwrap();
    assert_eq!(r.closed_graph.size(), 16);
    assert!(bip.x.iter().all(|x| r.closed_graph.neighbors(x) == bip.y));
    assert_eq!(r.closed_h.coefficients(), complete_bipartite_h(4).as_slice());
    assert_eq!(r.closed_h.degree(), r.original_h.degree());
    assert_eq!(r.closed_h.next_to_leading(), r.original_h.next_to_leading());
}

#[test]
fn petersen_h_vector_and_flags() {
    let g = petersen();
    assert!(g.bipartition().is_none());
    let h: HVector = h_vector(&g, &HilbertOptions::default()).unwrap();
    assert_eq!(h.coefficients(), &[1, 5, 15, 25, 5, 1]);
    assert_eq!(h.krull_dim(), 10);
    let flags = HFlags::of(&h);
    assert!(flags.leading_is_one && flags.h1_equals_next_to_leading && !flags.palindromic);
    let wide: WideHVector = h_vector(&g, &HilbertOptions::default()).unwrap();
    assert_eq!(wide.coefficients(), &[1i128, 5, 15, 25, 5, 1]);
}

#[test]
fn full_window_agrees_with_degree_bound() {
    let full = HilbertOptions {
        window: Window::Full,
        ..HilbertOptions::default()
    };
    for g in [cube(), complete_bipartite(3, 4), glued_at_vertex(&cycle(6))] {
        let a: HVector = h_vector(&g, &full).unwrap();
        let b: HVector = h_vector(&g, &HilbertOptions::default()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn reciprocity_matches_for_hexagon_and_k33() {
    let c6: HVector = h_vector(&cycle(6), &HilbertOptions::default()).unwrap();
    assert_eq!(c6.interior_count(3).unwrap(), 1);
    assert_eq!(c6.interior_count(2).unwrap(), 0);
    assert_eq!(c6.interior_count(4).unwrap(), 6);
    let k33 = classify(&complete_bipartite(3, 3), &complete_bipartite(3, 3).bipartition().unwrap(), &Limits::default()).unwrap();
    assert_eq!(k33.hvec.interior_count(4).unwrap(), 9);
}
