use std::cmp::Ordering;

use incmin::binomial::binomial_rep;
use incmin::compression::{
    borel_ideal, compress, fixpoint, initial_segment_of_size, is_compressed, is_left_compressed, is_right_compressed,
    is_shifted, left_compress, right_compress,
};
use incmin::family::shadow;
use incmin::inc::{inc_image_family, inc_image_set};
use incmin::numeric::{chain_feasible, inc_num, kk_feasible, shadow_num, FVectorChain};
use incmin::order::{borel_leq, family_squashed_cmp, rank, squashed_cmp, unrank};
use incmin::simplicial::{check_chain, compress_complex, construct_chain, f_vector, inc_complex, validate_complex};
use incmin::{DSet, Family, SimplicialComplex};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn dset_of(d: usize, max: u32) -> impl Strategy<Value = DSet> {
    subsequence((1..=max).collect::<Vec<_>>(), d).prop_map(|e| DSet::new(e).unwrap())
}

fn any_dset(max_d: usize, max: u32) -> impl Strategy<Value = DSet> {
    (1..=max_d).prop_flat_map(move |d| dset_of(d, max))
}

fn family_of(d: usize, max: u32, max_len: usize) -> impl Strategy<Value = Family> {
    proptest::collection::vec(dset_of(d, max), 0..=max_len).prop_map(move |v| Family::from_members(d, v).unwrap())
}

/// Grade, then two families of that grade.
fn family_pair(max_d: usize, max: u32, max_len: usize) -> impl Strategy<Value = (Family, Family)> {
    (1..=max_d).prop_flat_map(move |d| (family_of(d, max, max_len), family_of(d, max, max_len)))
}

fn any_family(min_d: usize, max_d: usize, max: u32, max_len: usize) -> impl Strategy<Value = Family> {
    (min_d..=max_d).prop_flat_map(move |d| family_of(d, max, max_len))
}

fn shifted_family(max_d: usize, max: u32) -> impl Strategy<Value = Family> {
    (1..=max_d).prop_flat_map(move |d| {
        proptest::collection::vec(dset_of(d, max), 0..4).prop_map(move |gens| {
            gens.iter().fold(Family::empty(d).unwrap(), |acc, u| acc.union(&borel_ideal(u)).unwrap())
        })
    })
}

fn complex(max_vertex: u32) -> impl Strategy<Value = SimplicialComplex> {
    proptest::collection::vec(any_dset(4, max_vertex), 0..5).prop_map(SimplicialComplex::from_facets)
}

#[test]
fn squashed_order_matches_segment_positions() {
    for d in 1..=5 {
        let sets: Vec<DSet> = initial_segment_of_size(d, 40).unwrap().iter().cloned().collect();
        for (i, u) in sets.iter().enumerate() {
            for (j, v) in sets.iter().enumerate() {
                assert_eq!(squashed_cmp(u, v).unwrap(), i.cmp(&j));
            }
        }
    }
}

proptest! {
    #[test]
    fn squashed_order_laws(d in 1usize..=5, u in any::<u64>(), v in any::<u64>(), w in any::<u64>()) {
        let pick = |x: u64| unrank(x % 5000 + 1, d).unwrap();
        let (u, v, w) = (pick(u), pick(v), pick(w));
        let uv = squashed_cmp(&u, &v).unwrap();
        prop_assert_eq!(uv, squashed_cmp(&v, &u).unwrap().reverse());
        prop_assert_eq!(uv == Ordering::Equal, u == v);
        prop_assert_eq!(uv, u.cmp(&v));
        if uv != Ordering::Greater && squashed_cmp(&v, &w).unwrap() != Ordering::Greater {
            prop_assert_ne!(squashed_cmp(&u, &w).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn rank_unrank_round_trip(m in 1u64..=100_000, d in 1usize..=6) {
        let u = unrank(m, d).unwrap();
        prop_assert_eq!(u.len(), d);
        prop_assert_eq!(rank(&u).unwrap(), m);
    }

    #[test]
    fn unrank_rank_round_trip(u in any_dset(6, 40)) {
        prop_assert_eq!(unrank(rank(&u).unwrap(), u.len()).unwrap(), u);
    }

    #[test]
    fn borel_below_implies_squashed_below(a in dset_of(5, 12), b in dset_of(5, 12)) {
        if borel_leq(&a, &b).unwrap() {
            prop_assert_ne!(squashed_cmp(&a, &b).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn binomial_rep_invariants(m in 0u64..=1_000_000_000, d in 1usize..=8) {
        let rep = binomial_rep(m, d).unwrap();
        prop_assert!(rep.is_well_formed());
        prop_assert_eq!(rep.value().unwrap(), m);
        prop_assert_eq!(rep.is_zero(), m == 0);
    }

    #[test]
    fn numeric_operators_match_segments(m in 0u64..=2000, d in 1usize..=4) {
        let seg = initial_segment_of_size(d, m as usize).unwrap();
        prop_assert_eq!(inc_num(m, d).unwrap(), inc_image_family(&seg).len() as u64);
        if d >= 2 {
            prop_assert_eq!(shadow_num(m, d).unwrap(), shadow(&seg).unwrap().len() as u64);
        }
    }

    #[test]
    fn inc_num_is_rank_of_successor(m in 1u64..=10_000, d in 1usize..=5) {
        let up = unrank(m, d).unwrap().shift_by(1).unwrap();
        prop_assert_eq!(inc_num(m, d).unwrap(), rank(&up).unwrap());
    }

    #[test]
    fn numeric_operators_are_monotone(m in 0u64..=50_000, d in 1usize..=6) {
        prop_assert!(inc_num(m, d).unwrap() <= inc_num(m + 1, d).unwrap());
        prop_assert!(shadow_num(m, d).unwrap() <= shadow_num(m + 1, d).unwrap());
        prop_assert!(inc_num(m, d).unwrap() >= m);
    }

    #[test]
    fn kruskal_katona_lower_bound(f in any_family(2, 4, 8, 20)) {
        let s = shadow(&f).unwrap();
        prop_assert!(s.len() as u64 >= shadow_num(f.len() as u64, f.d()).unwrap());
        prop_assert_eq!(shadow(&compress(&f)).unwrap().len() as u64, shadow_num(f.len() as u64, f.d()).unwrap());
    }

    #[test]
    fn inc_is_monotone_and_additive((f, g) in family_pair(4, 9, 12)) {
        let union = f.union(&g).unwrap();
        let inc_f = inc_image_family(&f);
        prop_assert!(f.is_subset(&inc_f));
        prop_assert!(inc_f.is_subset(&inc_image_family(&union)));
        prop_assert_eq!(inc_image_family(&union), inc_f.union(&inc_image_family(&g)).unwrap());
    }

    #[test]
    fn single_set_image_has_d_plus_one_members(u in any_dset(6, 30)) {
        prop_assert_eq!(inc_image_set(&u).len(), u.len() + 1);
    }

    #[test]
    fn inc_preserves_shiftedness(f in shifted_family(4, 8)) {
        prop_assert!(is_shifted(&f));
        prop_assert!(is_shifted(&inc_image_family(&f)));
    }

    #[test]
    fn compression_minimizes_inc(f in any_family(1, 4, 9, 15)) {
        let c = compress(&f);
        prop_assert_eq!(c.len(), f.len());
        prop_assert!(is_compressed(&c));
        prop_assert_ne!(family_squashed_cmp(&c, &f).unwrap(), Ordering::Greater);
        let inc_c = inc_image_family(&c);
        let inc_f = inc_image_family(&f);
        prop_assert!(inc_c.len() <= inc_f.len());
        prop_assert!(inc_c.is_subset(&compress(&inc_f)));
        prop_assert_eq!(inc_c.len() as u64, inc_num(f.len() as u64, f.d()).unwrap());
    }

    #[test]
    fn partial_compressions(f in any_family(2, 4, 9, 15)) {
        let l = left_compress(&f).unwrap();
        let r = right_compress(&f).unwrap();
        prop_assert_eq!(l.len(), f.len());
        prop_assert_eq!(r.len(), f.len());
        prop_assert!(is_left_compressed(&l));
        prop_assert!(is_right_compressed(&r));
        prop_assert_ne!(family_squashed_cmp(&l, &f).unwrap(), Ordering::Greater);
        prop_assert_ne!(family_squashed_cmp(&r, &f).unwrap(), Ordering::Greater);
        let fix = fixpoint(&f).unwrap();
        prop_assert_eq!(fix.len(), f.len());
        prop_assert!(is_left_compressed(&fix) && is_right_compressed(&fix));
        prop_assert!(is_shifted(&fix));
        prop_assert!(inc_image_family(&fix).len() <= inc_image_family(&f).len());
    }

    #[test]
    fn complex_operations(delta in complex(7)) {
        let inc = inc_complex(&delta).unwrap();
        prop_assert!(delta.is_subcomplex_of(&inc));
        let c = compress_complex(&delta).unwrap();
        prop_assert_eq!(f_vector(&c), f_vector(&delta));
        prop_assert!(kk_feasible(&f_vector(&delta)).unwrap());
        let inc_c = inc_complex(&c).unwrap();
        prop_assert!(inc_c.is_compressed());
        for d in 1..=delta.top_grade() {
            prop_assert!(inc_c.grade(d).len() <= inc.grade(d).len());
        }
        let regraded = validate_complex(delta.grades().values().cloned()).unwrap();
        prop_assert_eq!(regraded, delta);
    }

    #[test]
    fn construct_chain_round_trip(
        start in complex(4),
        extras in proptest::collection::vec(proptest::collection::vec(any_dset(3, 8), 0..3), 0..4),
    ) {
        let mut chain = vec![start];
        for extra in extras {
            let last = chain.last().unwrap();
            let faces: Vec<DSet> = inc_complex(last).unwrap().faces().cloned().chain(extra).collect();
            chain.push(SimplicialComplex::from_facets(faces));
        }
        prop_assert_eq!(check_chain(&chain), None);
        let fvs = FVectorChain::new(chain.iter().map(f_vector).collect()).unwrap();
        prop_assert!(chain_feasible(&fvs).unwrap());
        let built = construct_chain(&fvs).unwrap();
        prop_assert_eq!(check_chain(&built), None);
        prop_assert!(built.iter().all(SimplicialComplex::is_compressed));
        let rebuilt: Vec<_> = built.iter().map(f_vector).collect();
        prop_assert_eq!(rebuilt.as_slice(), fvs.vectors());
    }
}
