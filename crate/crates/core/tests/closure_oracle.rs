mod common;

use common::{oracle_center, oracle_closure, oracle_sum_dim};
use sl2loop::par::Execution;
use sl2loop::subalgebra_lab::onsager::onsager_pairs;
use sl2loop::subalgebra_lab::{onsager_spaces, subalgebra_closure, DegreeCap};
use sl2loop::tetrahedron::sigma_hat;

/// Truncated dimensions of O, O', O'' and of O + O' + O'' + C, produced by
/// the brute-force oracle and pinned.
const PINNED: [(u32, [usize; 3], usize); 4] = [
    (1, [4, 4, 4], 14),
    (2, [7, 7, 7], 23),
    (3, [10, 10, 10], 32),
    (4, [13, 13, 13], 41),
];

#[test]
fn oracle_matches_pinned_dimensions() {
    for (cap, dims, sum) in PINNED.into_iter().take(3) {
        let spans: Vec<_> = onsager_pairs()
            .iter()
            .map(|(g, h)| oracle_closure(&[sigma_hat(*g), sigma_hat(*h)], cap))
            .collect();
        let got: Vec<usize> = spans.iter().map(|s| s.dim()).collect();
        assert_eq!(got, dims, "cap {cap}");
        let center = oracle_center();
        assert_eq!(
            oracle_sum_dim(&[&spans[0], &spans[1], &spans[2], &center]),
            sum,
            "cap {cap}"
        );
    }
}

#[test]
fn lab_matches_pinned_dimensions() {
    for (cap, dims, sum) in PINNED {
        let spaces = onsager_spaces(DegreeCap::new(cap), Execution::default()).unwrap();
        let got: Vec<usize> = spaces[..3].iter().map(|s| s.dim()).collect();
        assert_eq!(got, dims, "cap {cap}");
        let total = spaces[1..]
            .iter()
            .fold(spaces[0].clone(), |acc, s| acc.sum(s));
        assert_eq!(total.dim(), sum, "cap {cap}");
    }
}

#[test]
fn lab_matches_oracle_on_other_generators() {
    use sl2loop::tetrahedron::GenSym;
    let gen_sets: [&[GenSym]; 3] = [
        &[GenSym::X(0, 1), GenSym::X(1, 2)],
        &[GenSym::X(1, 2), GenSym::X(2, 3), GenSym::X(3, 1)],
        &[GenSym::X(0, 3), GenSym::X(3, 0)],
    ];
    for gens in gen_sets {
        let images: Vec<_> = gens.iter().map(|g| sigma_hat(*g)).collect();
        for cap in 1..=2 {
            let lab =
                subalgebra_closure(&images, DegreeCap::new(cap), Execution::Sequential).unwrap();
            let oracle = oracle_closure(&images, cap);
            assert_eq!(lab.dim(), oracle.dim(), "{gens:?} at cap {cap}");
        }
    }
}

#[test]
fn closures_grow_monotonically_with_the_cap() {
    for (g, h) in onsager_pairs() {
        let gens = [sigma_hat(g), sigma_hat(h)];
        let mut prev = None;
        for cap in 1..=4 {
            let cur = subalgebra_closure(&gens, DegreeCap::new(cap), Execution::default()).unwrap();
            if let Some(prev) = prev {
                let restricted = cur.restrict(DegreeCap::new(cap - 1));
                assert!(
                    sl2loop::subalgebra_lab::SpanBasis::is_subspace_of(&prev, &restricted),
                    "{g}, {h} at cap {cap}"
                );
            }
            prev = Some(cur);
        }
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let (g, h) = onsager_pairs()[1];
    let gens = [sigma_hat(g), sigma_hat(h)];
    let cap = DegreeCap::new(3);
    let seq = subalgebra_closure(&gens, cap, Execution::Sequential).unwrap();
    let par = subalgebra_closure(&gens, cap, Execution::default()).unwrap();
    assert_eq!(seq, par);
}
