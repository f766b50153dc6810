use std::collections::BTreeMap;

use pillow_core::degeneration::{build_table, npoint_budget, local_del_pezzo_characters, ObjectType};
use pillow_core::pillow::{
    build_pillow, disjoint_pairs_from_degrees, formula_disjoint_pairs, line_degrees,
    quadric_stage, triangle_degrees, verify_sphere_triangulation, verify_stage, LineKind,
};
use pillow_core::surface::{
    branch_characters, del_pezzo, k3, verify_character_identities, SurfaceClasses,
    CHECK_HURWITZ, CHECK_R_DOT_R0, CHECK_TWO_N_THREE_K, CHECK_TWO_N_TWO_K,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn identities_hold_whenever_characters_exist(
        d in 1i64..10_000,
        genus in 0i64..10_000,
        k2 in -10_000i64..10_000,
        euler in -10_000i64..10_000,
    ) {
        // Pick K.H from the sectional genus so the parity invariant holds.
        let kh = 2 * genus - 2 - d;
        let s = SurfaceClasses::new(d, kh, k2, euler, "random").unwrap();
        if let Ok(c) = branch_characters(&s) {
            let report = verify_character_identities(&s, &c);
            prop_assert!(report.all_passed(), "{:?}", report);
        }
    }

    #[test]
    fn shifting_nodes_breaks_exactly_the_node_identities(g in 3i64..500, delta in 1i64..50) {
        let s = k3(g).unwrap();
        let mut c = branch_characters(&s).unwrap();
        c.n += delta;
        let report = verify_character_identities(&s, &c);
        prop_assert!(!report.get(CHECK_TWO_N_THREE_K).unwrap().passed);
        prop_assert!(!report.get(CHECK_TWO_N_TWO_K).unwrap().passed);
        prop_assert!(!report.get(CHECK_R_DOT_R0).unwrap().passed);
        prop_assert!(report.get(CHECK_HURWITZ).unwrap().passed);
    }

    #[test]
    fn pair_formula_is_integral_for_every_admissible_g(a in 2u64..200, b in 2u64..200) {
        let g = 2 * a * b + 1;
        let numerator = 9 * g * g + 78 - 51 * g;
        prop_assert_eq!(numerator % 2, 0);
        prop_assert_eq!(formula_disjoint_pairs(g).unwrap(), numerator / 2);
    }

    #[test]
    fn pillow_counts(a in 2u32..=8, b in 2u32..=8) {
        let c = build_pillow(a, b).unwrap();
        let g = 2 * a * b + 1;
        prop_assert_eq!(c.g, g);
        prop_assert_eq!(c.vertices.len() as u32, g + 1);
        prop_assert_eq!(c.lines.len() as u32, 3 * g - 3);
        prop_assert_eq!(c.triangles.len() as u32, 2 * g - 2);
        prop_assert_eq!(2 * c.lines.len(), 3 * c.triangles.len());
        prop_assert_eq!(c.euler_characteristic(), 2);
        prop_assert!(verify_sphere_triangulation(&c).all_passed());

        let deg = line_degrees(&c);
        prop_assert_eq!(deg.values().filter(|&&d| d == 3).count(), 4);
        prop_assert_eq!(deg.values().filter(|&&d| d == 6).count() as u32, 2 * a * b - 2);
        prop_assert_eq!(deg.values().sum::<usize>(), 2 * c.lines.len());
        for corner in c.corners() {
            prop_assert_eq!(deg[&corner], 3);
            prop_assert_eq!(triangle_degrees(&c)[&corner], 3);
        }
    }

    #[test]
    fn triangles_share_at_most_one_line(a in 2u32..=6, b in 2u32..=6) {
        let c = build_pillow(a, b).unwrap();
        let mut per_line: BTreeMap<_, usize> = BTreeMap::new();
        for t in &c.triangles {
            for e in t.edges() {
                *per_line.entry(e).or_default() += 1;
            }
        }
        prop_assert!(per_line.values().all(|&n| n == 2));
        for (i, s) in c.triangles.iter().enumerate() {
            for t in &c.triangles[i + 1..] {
                let shared = s.vertices.iter().filter(|v| t.contains(**v)).count();
                prop_assert!(shared <= 2);
            }
        }
    }

    #[test]
    fn quadric_stage_drops_exactly_the_diagonals(a in 2u32..=6, b in 2u32..=6) {
        let pillow = build_pillow(a, b).unwrap();
        let stage = quadric_stage(a, b).unwrap();
        let mut expected: Vec<_> = pillow.lines.iter().filter(|l| l.kind != LineKind::Diagonal).copied().collect();
        expected.sort();
        let mut got = stage.lines.clone();
        got.sort();
        prop_assert_eq!(got, expected);
        prop_assert!(verify_stage(&stage).all_passed());
    }

    #[test]
    fn table_counts_match_closed_forms(a in 2u32..=6, b in 2u32..=6) {
        let c = build_pillow(a, b).unwrap();
        let table = build_table(&c).unwrap();
        let g = i64::from(c.g);
        let count = |t| table.row(t).unwrap().count;
        prop_assert_eq!(count(ObjectType::Lines), 3 * g - 3);
        prop_assert_eq!(count(ObjectType::ThreePoints), 4);
        prop_assert_eq!(count(ObjectType::SixPoints), g - 3);
        prop_assert_eq!(count(ObjectType::TwoPoints) as u64, formula_disjoint_pairs(c.g.into()).unwrap());
        prop_assert_eq!(count(ObjectType::TwoPoints) as u64, disjoint_pairs_from_degrees(&c));
        let global = branch_characters(&k3(g).unwrap()).unwrap();
        prop_assert_eq!((table.totals.branch, table.totals.nodes, table.totals.cusps), (global.t, global.n, global.k));
        prop_assert_eq!(2 * count(ObjectType::Lines), global.b);
    }
}

#[test]
fn budgets_agree_with_local_del_pezzo() {
    for n in 3..=6 {
        let budget = npoint_budget(n).unwrap();
        let local = local_del_pezzo_characters(n).unwrap();
        assert_eq!(budget.branch_points + n, 12);
        assert_eq!((budget.nodes, budget.cusps), (local.n, local.k));
        assert_eq!(local, branch_characters(&del_pezzo(n).unwrap()).unwrap());
    }
}
