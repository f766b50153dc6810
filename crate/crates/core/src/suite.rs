//! Whole-library verification suites used by `pillow verify`.

use std::collections::BTreeSet;

use crate::degeneration::{verify_conservation, verify_local_budgets};
use crate::error::Result;
use crate::pillow::{
    build_pillow, cuple_reduction, gcd, line_degrees, planes_stage_of, quadric_stage,
    two_surface_stage, verify_sphere_triangulation, verify_stage, PairCensus, VertexId,
};
use crate::report::VerificationReport;
use crate::surface::{
    branch_characters, del_pezzo, k3, scroll_p1p1, verify_character_identities, veronese,
    BranchCharacters, SurfaceClasses,
};

fn family_check(
    report: &mut VerificationReport,
    surface: Result<SurfaceClasses>,
    closed: [i64; 4],
) -> Result<BranchCharacters> {
    let s = surface?;
    let c = branch_characters(&s)?;
    for (what, got, want) in [("b", c.b, closed[0]), ("n", c.n, closed[1]), ("k", c.k, closed[2]), ("t", c.t, closed[3])] {
        report.equal(format!("{}: {what} = closed form", s.label), got, want);
    }
    for mut check in verify_character_identities(&s, &c).checks {
        check.name = format!("{}: {}", s.label, check.name);
        report.push(check);
    }
    Ok(c)
}

/// Characters of every family member against the family's closed forms,
/// plus the four identities for each.
pub fn family_suite() -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    for r in 1..=20i64 {
        family_check(
            &mut report,
            veronese(r),
            [
                3 * r * (r - 1),
                3 * (r - 1) * (r - 2) * (3 * r * r + 3 * r - 8) / 2,
                3 * (r - 1) * (4 * r - 5),
                3 * (r - 1) * (r - 1),
            ],
        )?;
        family_check(
            &mut report,
            scroll_p1p1(r),
            [4 * r - 2, 4 * (r - 1) * (2 * r - 3), 6 * r - 6, 2 * r],
        )?;
    }
    for d in 3..=9i64 {
        family_check(
            &mut report,
            del_pezzo(d),
            [2 * d, 2 * (d - 2) * (d - 3), 6 * (d - 2), 12],
        )?;
    }
    for g in 3..=100i64 {
        family_check(
            &mut report,
            k3(g),
            [6 * g - 6, 18 * g * g - 78 * g + 84, 24 * (g - 2), 6 * g + 18],
        )?;
    }
    let v3 = branch_characters(&veronese(3)?)?;
    let dp9 = branch_characters(&del_pezzo(9)?)?;
    for (what, x, y) in [("b", v3.b, dp9.b), ("n", v3.n, dp9.n), ("k", v3.k, dp9.k), ("t", v3.t, dp9.t)] {
        report.equal(format!("veronese r=3 and del pezzo d=9 agree on {what}"), x, y);
    }
    report.extend(verify_local_budgets()?);
    Ok(report)
}

/// Every check on the pillow of bidegree `(a, b)`.
pub fn config_suite(a: u32, b: u32) -> Result<VerificationReport> {
    let c = build_pillow(a, b)?;
    let (ai, bi, g) = (i128::from(a), i128::from(b), i128::from(c.g));
    let mut report = VerificationReport::new();

    report.equal("|V| = 2ab + 2", c.vertices.len() as i128, 2 * ai * bi + 2);
    report.equal("|E| = 6ab = 3g - 3", c.lines.len() as i128, 3 * g - 3);
    report.equal("|F| = 4ab = 2g - 2", c.triangles.len() as i128, 2 * g - 2);
    report.extend(verify_sphere_triangulation(&c));

    let degrees = line_degrees(&c);
    let census = |n| degrees.values().filter(|&&d| d == n).count() as i128;
    report.equal("vertices on 3 lines", census(3), 4);
    report.equal("vertices on 6 lines", census(6), 2 * ai * bi - 2);
    report.equal("sum of line degrees = 2|E|", degrees.values().sum::<usize>() as i128, 2 * c.lines.len() as i128);

    let pairs = PairCensus::of(&c)?;
    report.equal("disjoint pairs: enumeration = degree count", pairs.brute_force, pairs.from_degrees);
    report.equal("disjoint pairs: enumeration = closed form", pairs.brute_force, pairs.formula);

    report.extend(verify_conservation(&c)?);

    for stage in [quadric_stage(a, b)?, two_surface_stage(a, b)?, planes_stage_of(&c)] {
        let prefix = stage.stage.as_str();
        for mut check in verify_stage(&stage).checks {
            check.name = format!("{prefix}: {}", check.name);
            report.push(check);
        }
    }

    let transposed = build_pillow(b, a)?;
    let map = c.transpose_relabeling();
    let target: BTreeSet<[VertexId; 3]> = transposed.triangles.iter().map(|t| t.vertices).collect();
    let hits = c
        .triangles
        .iter()
        .filter(|t| {
            let mut v = t.vertices.map(|x| map[&x]);
            v.sort_unstable();
            target.contains(&v)
        })
        .count();
    report.equal("transpose relabeling maps onto (b, a) pillow", hits as i128, target.len() as i128);

    let k = k3(i64::from(c.g))?;
    report.extend(verify_character_identities(&k, &branch_characters(&k)?));

    let cuple = cuple_reduction(a, b)?;
    report.equal("c divides a", a % cuple.c, 0);
    report.equal("c divides b", b % cuple.c, 0);
    report.equal("reduced bidegree is coprime", gcd(cuple.reduced.0, cuple.reduced.1), 1);
    Ok(report)
}
