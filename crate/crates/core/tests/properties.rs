//! Randomized invariants and brute-force oracles across modules.

use std::sync::OnceLock;

use poslab::bits::{self, Set};
use poslab::cli::analyze;
use poslab::diagram::{LeDiagram, Shape};
use poslab::enumeration::{enumerate_le_diagrams, positroid, shapes};
use poslab::matroid::{validate_bases, Matroid};
use poslab::network::{boundary_measurement, build_network, WeightAssignment};
use poslab::paving::{
    all_pldc_functions, build_pldc_diagram, is_sparse_paving_f, obstructions, recognize_paving_positroid,
    PldcFunction,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// Every Le-diagram with `n <= 6`, built once.
fn catalogue() -> &'static [LeDiagram] {
    static ALL: OnceLock<Vec<LeDiagram>> = OnceLock::new();
    ALL.get_or_init(|| (1..=6).flat_map(|n| (0..=n).flat_map(move |k| enumerate_le_diagrams(k, n))).collect())
}

fn pldc_catalogue() -> &'static [PldcFunction] {
    static ALL: OnceLock<Vec<PldcFunction>> = OnceLock::new();
    ALL.get_or_init(|| (3..=9).flat_map(|n| (2..n).flat_map(move |k| all_pldc_functions(k, n))).collect())
}

fn diagram() -> impl Strategy<Value = LeDiagram> {
    (0..catalogue().len()).prop_map(|i| catalogue()[i].clone())
}

fn pldc_function() -> impl Strategy<Value = PldcFunction> {
    (0..pldc_catalogue().len()).prop_map(|i| pldc_catalogue()[i].clone())
}

/// The Le condition read straight off its definition.
fn le_by_definition(d: &LeDiagram) -> bool {
    let k = d.k();
    let w = d.shape().width();
    for i in 1..=k {
        for j in 1..=w {
            if !d.shape().contains(i, j) || d.is_filled(i, j) {
                continue;
            }
            let above = (1..i).any(|r| d.is_filled(r, j));
            let left = (1..j).any(|c| d.is_filled(i, c));
            if above && left {
                return false;
            }
        }
    }
    true
}

/// Random shape plus random filling, Le or not.
fn any_filling() -> impl Strategy<Value = LeDiagram> {
    (1usize..=5, 1usize..=5)
        .prop_flat_map(|(k, w)| (Just(k), Just(w), proptest::collection::vec(0..=w, k)))
        .prop_flat_map(|(k, w, mut parts)| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let masks = parts.iter().map(|&p| 0u64..(1u64 << p)).collect::<Vec<_>>();
            (Just(k), Just(w), Just(parts), masks)
        })
        .prop_map(|(k, w, parts, masks)| {
            let shape = Shape::new(k, k + w, parts).unwrap();
            LeDiagram::from_row_masks(shape, masks).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn le_check_matches_definition(d in any_filling()) {
        prop_assert_eq!(d.validate_le(), le_by_definition(&d));
    }

    #[test]
    fn double_le_implies_le(d in any_filling()) {
        if matches!(d.validate_sq(), Ok(true)) {
            prop_assert!(d.validate_le());
        }
    }

    #[test]
    fn ascii_and_json_round_trip(d in diagram()) {
        let n = d.n();
        prop_assert_eq!(&LeDiagram::from_ascii(&d.to_ascii(), Some(n)).unwrap(), &d);
        prop_assert_eq!(&LeDiagram::from_json(&d.to_json()).unwrap(), &d);
    }

    #[test]
    fn dual_is_an_involution(d in diagram()) {
        let m = positroid(&d).unwrap();
        let dual = m.dual();
        prop_assert!(validate_bases(dual.n(), dual.rank(), dual.bases()));
        prop_assert_eq!(dual.rank(), m.n() - m.rank());
        prop_assert_eq!(dual.dual(), m);
    }

    #[test]
    fn positroid_satisfies_exchange(d in diagram()) {
        let m = positroid(&d).unwrap();
        prop_assert_eq!(m.rank(), d.k());
        prop_assert!(validate_bases(m.n(), m.rank(), m.bases()));
        prop_assert_eq!(m.loops(), bits::from_elements(d.loops()));
        prop_assert_eq!(m.coloops(), bits::from_elements(d.coloops()));
    }

    #[test]
    fn measurement_has_identity_on_sources(d in diagram()) {
        let meas = boundary_measurement(&build_network(&d, &WeightAssignment::Primes).unwrap()).unwrap();
        let sources = meas.sources().to_vec();
        for (r, &s) in sources.iter().enumerate() {
            for (c, &t) in sources.iter().enumerate() {
                let expected = BigRational::from_integer(BigInt::from(u8::from(r == c)));
                prop_assert_eq!(meas.get(s, t).unwrap(), &expected);
            }
        }
    }

    #[test]
    fn rank_is_submodular(d in diagram(), a in 0u64..64, b in 0u64..64) {
        let m = positroid(&d).unwrap();
        let (a, b) = (a & m.ground(), b & m.ground());
        let lhs = m.rank_of(a | b).unwrap() + m.rank_of(a & b).unwrap();
        prop_assert!(lhs <= m.rank_of(a).unwrap() + m.rank_of(b).unwrap());
    }

    #[test]
    fn verdict_flags_are_consistent(d in diagram()) {
        let v = analyze(&d).unwrap();
        if v.is_sq {
            prop_assert!(v.is_transversal && v.is_fundamental);
        }
        if v.is_fundamental {
            prop_assert!(v.is_transversal);
        }
        if v.is_sparse_paving {
            prop_assert!(v.is_paving);
        }
    }

    #[test]
    fn pldc_round_trip(f in pldc_function()) {
        let d = build_pldc_diagram(&f).unwrap();
        prop_assert!(d.validate_le());
        prop_assert_eq!(recognize_paving_positroid(&d).unwrap(), Some(f));
    }

    #[test]
    fn obstructions_are_large_and_meet_in_small_sets(f in pldc_function()) {
        let family = obstructions(&f).unwrap().all();
        let k = f.k();
        for (i, &h) in family.iter().enumerate() {
            prop_assert!(bits::size(h) >= k);
            for &g in &family[i + 1..] {
                prop_assert!(bits::size(h & g) <= k - 2, "{} and {}", bits::format(h), bits::format(g));
            }
        }
    }

    #[test]
    fn sparse_paving_function_test_matches_matroid(f in pldc_function()) {
        let m = positroid(&build_pldc_diagram(&f).unwrap()).unwrap();
        prop_assert!(m.is_paving());
        prop_assert_eq!(is_sparse_paving_f(&f).unwrap(), m.is_sparse_paving());
    }

    #[test]
    fn relaxation_of_stressed_hyperplanes_stays_a_matroid(d in diagram()) {
        let m = positroid(&d).unwrap();
        for h in m.stressed_hyperplanes().unwrap() {
            let relaxed = m.relax(h).unwrap();
            prop_assert!(validate_bases(relaxed.n(), relaxed.rank(), relaxed.bases()));
            let added = bits::k_subsets(m.n(), m.rank()).filter(|&s| s & !h == 0).count();
            prop_assert_eq!(relaxed.bases().len(), m.bases().len() + added);
        }
    }
}

/// Counts Le-fillings of every shape by testing all subsets of cells.
fn brute_force_le_count(k: usize, n: usize) -> usize {
    let mut total = 0;
    for shape in shapes(k, n) {
        let parts = shape.parts().to_vec();
        let cells: usize = parts.iter().sum();
        for choice in 0u64..(1 << cells) {
            let mut rest = choice;
            let masks: Vec<u64> = parts
                .iter()
                .map(|&p| {
                    let m = rest & ((1u64 << p) - 1);
                    rest >>= p;
                    m
                })
                .collect();
            let d = LeDiagram::from_row_masks(shape.clone(), masks).unwrap();
            if le_by_definition(&d) {
                total += 1;
            }
        }
    }
    total
}

#[test]
fn enumeration_matches_brute_force_fillings() {
    for n in 1..=6 {
        for k in 0..=n {
            let listed = enumerate_le_diagrams(k, n);
            assert!(listed.iter().all(LeDiagram::validate_le));
            assert_eq!(listed.len(), brute_force_le_count(k, n), "k={k}, n={n}");
        }
    }
}

#[test]
fn positroids_per_n_follow_a000522() {
    // sum_{j<=n} n!/j!
    let expected = |n: u64| -> u64 {
        let mut total = 0;
        let mut term = 1;
        for j in (0..=n).rev() {
            total += term;
            term *= j.max(1);
        }
        total
    };
    for n in 1..=7usize {
        let count: usize = (0..=n).map(|k| enumerate_le_diagrams(k, n).len()).sum();
        assert_eq!(count as u64, expected(n as u64), "n={n}");
    }
}

#[test]
fn distinct_diagrams_give_distinct_positroids() {
    for n in 1..=6 {
        for k in 0..=n {
            let mut seen: Vec<Vec<Set>> = enumerate_le_diagrams(k, n)
                .iter()
                .map(|d| positroid(d).unwrap().bases().to_vec())
                .collect();
            let total = seen.len();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), total, "k={k}, n={n}");
        }
    }
}

#[test]
fn uniform_matroids_are_sparse_paving() {
    for n in 1..=8 {
        for r in 0..=n {
            let u = Matroid::uniform(r, n).unwrap();
            assert!(u.is_sparse_paving());
            assert_eq!(u.dual(), Matroid::uniform(n - r, n).unwrap());
        }
    }
}
