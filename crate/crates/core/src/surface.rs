//! Numerical characters of the branch curve of a general projection of a
//! smooth surface to the plane, computed from `d = H^2`, `K.H`, `K^2` and the
//! topological Euler number.
//!
//! Everything is integer arithmetic. Intermediate values are carried in
//! `i128` with checked multiplication so that extreme inputs surface as
//! [`Error::Overflow`] instead of wrapping.

use serde::Serialize;

use crate::error::{Character, Error, Result};
use crate::report::VerificationReport;

/// Intersection numbers of a smooth projective surface `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceClasses {
    /// Degree, `H^2`.
    pub d: i64,
    /// `K.H`
    pub kh: i64,
    /// `K^2`
    pub k2: i64,
    /// Topological Euler number `e(S)`.
    pub euler: i64,
    pub label: String,
    /// Dimension of the ambient projective space. Informational only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ambient_dim: Option<u32>,
}

impl SurfaceClasses {
    /// Validates `d >= 1`, the parity of `d + K.H` and a nonnegative
    /// sectional genus.
    pub fn new(d: i64, kh: i64, k2: i64, euler: i64, label: impl Into<String>) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidSurface(format!("degree d = {d} must be at least 1")));
        }
        let adjunction = i128::from(d) + i128::from(kh);
        if adjunction % 2 != 0 {
            return Err(Error::InvalidSurface(format!(
                "d + K.H = {adjunction} must be even"
            )));
        }
        if adjunction / 2 + 1 < 0 {
            return Err(Error::InvalidSurface(format!(
                "sectional genus (d + K.H)/2 + 1 = {} is negative",
                adjunction / 2 + 1
            )));
        }
        Ok(SurfaceClasses {
            d,
            kh,
            k2,
            euler,
            label: label.into(),
            ambient_dim: None,
        })
    }

    pub fn with_ambient_dim(mut self, n: u32) -> Self {
        self.ambient_dim = Some(n);
        self
    }

    /// Genus of a smooth hyperplane section: `2g(H) - 2 = H^2 + K.H`.
    pub fn sectional_genus(&self) -> i128 {
        (i128::from(self.d) + i128::from(self.kh)) / 2 + 1
    }

    /// Degree of the branch curve, `3d + K.H`.
    pub fn branch_degree(&self) -> i128 {
        3 * i128::from(self.d) + i128::from(self.kh)
    }
}

/// Degree, nodes, cusps and turning points of a general branch curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BranchCharacters {
    pub b: i64,
    pub n: i64,
    pub k: i64,
    pub t: i64,
}

/// Classes of the ramification curve `R = K + 3H` and the residual curve
/// `R0 = -2K + (b - 6)H`, each as `(K-coefficient, H-coefficient)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RamificationClasses {
    pub r_class: (i128, i128),
    pub r0_class: (i128, i128),
    pub r_dot_r0: i128,
}

impl RamificationClasses {
    pub fn of(s: &SurfaceClasses) -> Result<Self> {
        let b = s.branch_degree();
        let r_class = (1, 3);
        let r0_class = (-2, b - 6);
        let r_dot_r0 = intersect(s, r_class, r0_class)?;
        Ok(RamificationClasses {
            r_class,
            r0_class,
            r_dot_r0,
        })
    }
}

/// Intersection of `x1 K + y1 H` with `x2 K + y2 H` on `s`.
fn intersect(s: &SurfaceClasses, (x1, y1): (i128, i128), (x2, y2): (i128, i128)) -> Result<i128> {
    let ov = || Error::Overflow("intersection product");
    let kk = x1.checked_mul(x2).and_then(|c| c.checked_mul(s.k2.into())).ok_or_else(ov)?;
    let kh = x1
        .checked_mul(y2)
        .and_then(|c| c.checked_add(x2.checked_mul(y1)?))
        .and_then(|c| c.checked_mul(s.kh.into()))
        .ok_or_else(ov)?;
    let hh = y1.checked_mul(y2).and_then(|c| c.checked_mul(s.d.into())).ok_or_else(ov)?;
    kk.checked_add(kh).and_then(|c| c.checked_add(hh)).ok_or_else(ov)
}

fn narrow(which: Character, value: i128) -> Result<i64> {
    if value < 0 {
        return Err(Error::NegativeCharacter { which, value });
    }
    i64::try_from(value).map_err(|_| Error::Overflow("branch character"))
}

pub fn branch_characters(s: &SurfaceClasses) -> Result<BranchCharacters> {
    let (d, k2, euler) = (i128::from(s.d), i128::from(s.k2), i128::from(s.euler));
    let b = s.branch_degree();
    if b % 2 != 0 {
        return Err(Error::NonIntegralNodeCount { b });
    }
    let half_b_sq = b
        .checked_mul(b)
        .ok_or(Error::Overflow("b^2"))?
        / 2;
    // |b| < 2^66, so every other product below stays far from the i128 limit.
    let n = half_b_sq
        .checked_add(-3 * k2 + euler + 24 * d - 15 * b)
        .ok_or(Error::Overflow("node count"))?;
    let k = 2 * k2 - euler - 15 * d + 9 * b;
    let t = euler - 3 * d + 2 * b;
    Ok(BranchCharacters {
        b: narrow(Character::Degree, b)?,
        n: narrow(Character::Nodes, n)?,
        k: narrow(Character::Cusps, k)?,
        t: narrow(Character::TurningPoints, t)?,
    })
}

pub const CHECK_TWO_N_THREE_K: &str = "2n+3k = 3d + b^2 - 3b - e(S)";
pub const CHECK_TWO_N_TWO_K: &str = "2n+2k = -2K^2 + (b-12)KH + (3b-18)H^2";
pub const CHECK_R_DOT_R0: &str = "R.R0 = 2(n+k)";
pub const CHECK_HURWITZ: &str = "2g(H)-2 = -2d + b";

/// Re-derives the four intermediate identities that tie the characters to
/// the surface. An overflowing side is reported as a failed check with
/// `rhs = 0`.
pub fn verify_character_identities(s: &SurfaceClasses, c: &BranchCharacters) -> VerificationReport {
    let mut report = VerificationReport::new();
    let (d, kh, k2, euler) = (
        i128::from(s.d),
        i128::from(s.kh),
        i128::from(s.k2),
        i128::from(s.euler),
    );
    let (b, n, k) = (i128::from(c.b), i128::from(c.n), i128::from(c.k));

    let lhs = 2 * n + 3 * k;
    match b.checked_mul(b) {
        Some(b2) => report.equal(CHECK_TWO_N_THREE_K, lhs, 3 * d + b2 - 3 * b - euler),
        None => report.push(failed(CHECK_TWO_N_THREE_K, lhs)),
    }

    let lhs = 2 * n + 2 * k;
    let rhs = (b - 12)
        .checked_mul(kh)
        .zip((3 * b - 18).checked_mul(d))
        .and_then(|(x, y)| (-2 * k2).checked_add(x)?.checked_add(y));
    match rhs {
        Some(rhs) => report.equal(CHECK_TWO_N_TWO_K, lhs, rhs),
        None => report.push(failed(CHECK_TWO_N_TWO_K, lhs)),
    }

    let r0 = (-2, b - 6);
    match intersect(s, (1, 3), r0) {
        Ok(dot) => report.equal(CHECK_R_DOT_R0, dot, 2 * (n + k)),
        Err(_) => report.push(failed(CHECK_R_DOT_R0, 2 * (n + k))),
    }

    report.equal(CHECK_HURWITZ, 2 * s.sectional_genus() - 2, -2 * d + b);
    report
}

fn failed(name: &str, lhs: i128) -> crate::report::Check {
    crate::report::Check {
        name: name.to_string(),
        passed: false,
        lhs,
        rhs: 0,
    }
}

/// The `r`-th Veronese image of the plane.
pub fn veronese(r: i64) -> Result<SurfaceClasses> {
    if r < 1 {
        return Err(Error::InvalidParameter(format!("veronese r = {r}, need r >= 1")));
    }
    let d = r.checked_mul(r).ok_or(Error::Overflow("r^2"))?;
    let kh = r.checked_mul(-3).ok_or(Error::Overflow("-3r"))?;
    SurfaceClasses::new(d, kh, 9, 3, format!("veronese r={r}"))
}

/// `P1 x P1` embedded by `|(1, r)|`, a rational normal scroll.
pub fn scroll_p1p1(r: i64) -> Result<SurfaceClasses> {
    if r < 1 {
        return Err(Error::InvalidParameter(format!("scroll r = {r}, need r >= 1")));
    }
    let d = r.checked_mul(2).ok_or(Error::Overflow("2r"))?;
    let kh = d.checked_neg().and_then(|x| x.checked_sub(2)).ok_or(Error::Overflow("-2r-2"))?;
    let s = SurfaceClasses::new(d, kh, 8, 4, format!("scroll r={r}"))?;
    Ok(match u32::try_from(d + 1) {
        Ok(n) => s.with_ambient_dim(n),
        Err(_) => s,
    })
}

/// Anticanonical Del Pezzo surface of degree `deg` in `P^deg`.
pub fn del_pezzo(deg: i64) -> Result<SurfaceClasses> {
    if !(3..=9).contains(&deg) {
        return Err(Error::InvalidParameter(format!(
            "del pezzo degree {deg}, need 3 <= d <= 9"
        )));
    }
    Ok(SurfaceClasses::new(deg, -deg, deg, 12 - deg, format!("del pezzo d={deg}"))?
        .with_ambient_dim(deg as u32))
}

/// K3 surface of degree `2g - 2` in `P^g`.
pub fn k3(g: i64) -> Result<SurfaceClasses> {
    if g < 3 {
        return Err(Error::InvalidParameter(format!("k3 genus g = {g}, need g >= 3")));
    }
    let d = g
        .checked_mul(2)
        .and_then(|x| x.checked_sub(2))
        .ok_or(Error::Overflow("2g-2"))?;
    let s = SurfaceClasses::new(d, 0, 0, 24, format!("k3 g={g}"))?;
    Ok(match u32::try_from(g) {
        Ok(n) => s.with_ambient_dim(n),
        Err(_) => s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chars(s: Result<SurfaceClasses>) -> (i64, i64, i64, i64) {
        let c = branch_characters(&s.unwrap()).unwrap();
        (c.b, c.n, c.k, c.t)
    }

    #[test]
    fn family_examples() {
        assert_eq!(chars(veronese(2)), (6, 0, 9, 3));
        assert_eq!(chars(veronese(1)), (0, 0, 0, 0));
        assert_eq!(chars(veronese(3)), (18, 84, 42, 12));
        assert_eq!(chars(scroll_p1p1(2)), (6, 4, 6, 4));
        assert_eq!(chars(scroll_p1p1(1)), (2, 0, 0, 2));
        assert_eq!(chars(scroll_p1p1(5)), (18, 112, 24, 10));
        assert_eq!(chars(del_pezzo(3)), (6, 0, 6, 12));
        assert_eq!(chars(del_pezzo(6)), (12, 24, 24, 12));
        assert_eq!(chars(del_pezzo(9)), (18, 84, 42, 12));
        // 6(g-2)(3g-7) = 12 at g = 3.
        assert_eq!(chars(k3(3)), (12, 12, 24, 36));
        assert_eq!(chars(k3(9)), (48, 840, 168, 72));
        // 6(g-2)(3g-7) at g = 13 is 6 * 11 * 32.
        assert_eq!(chars(k3(13)), (72, 2112, 264, 96));
    }

    #[test]
    fn constructor_classes() {
        let v = veronese(2).unwrap();
        assert_eq!((v.d, v.kh, v.k2, v.euler), (4, -6, 9, 3));
        let v = veronese(1).unwrap();
        assert_eq!((v.d, v.kh, v.k2, v.euler), (1, -3, 9, 3));
        let dp = del_pezzo(9).unwrap();
        let v3 = veronese(3).unwrap();
        assert_eq!((dp.d, dp.kh, dp.k2, dp.euler), (v3.d, v3.kh, v3.k2, v3.euler));
    }

    #[test]
    fn constructor_domains() {
        assert!(matches!(veronese(0), Err(Error::InvalidParameter(_))));
        assert!(matches!(scroll_p1p1(-1), Err(Error::InvalidParameter(_))));
        assert!(matches!(del_pezzo(2), Err(Error::InvalidParameter(_))));
        assert!(matches!(del_pezzo(10), Err(Error::InvalidParameter(_))));
        assert!(matches!(k3(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn surface_invariants_rejected() {
        assert!(matches!(SurfaceClasses::new(0, 0, 0, 0, ""), Err(Error::InvalidSurface(_))));
        assert!(matches!(SurfaceClasses::new(3, 0, 0, 0, ""), Err(Error::InvalidSurface(_))));
        // d + KH = -6 gives sectional genus -2.
        assert!(matches!(SurfaceClasses::new(1, -7, 0, 0, ""), Err(Error::InvalidSurface(_))));
    }

    #[test]
    fn odd_branch_degree_is_rejected() {
        // b = 2d + (d + KH) is even for any validated surface, so bypass `new`.
        let s = SurfaceClasses {
            d: 1,
            kh: 0,
            k2: 0,
            euler: 0,
            label: String::new(),
            ambient_dim: None,
        };
        assert_eq!(branch_characters(&s), Err(Error::NonIntegralNodeCount { b: 3 }));
    }

    #[test]
    fn negative_characters_are_rejected() {
        let s = SurfaceClasses::new(1, -3, 9, 100, "").unwrap();
        assert_eq!(
            branch_characters(&s),
            Err(Error::NegativeCharacter { which: Character::Cusps, value: -97 })
        );
        let s = SurfaceClasses::new(1, -3, 9, 2, "").unwrap();
        assert!(matches!(
            branch_characters(&s),
            Err(Error::NegativeCharacter { which: Character::Nodes, .. })
        ));
    }

    #[test]
    fn overflow_is_detected() {
        let s = SurfaceClasses::new(i64::MAX - 1, i64::MAX - 1, 0, 0, "").unwrap();
        assert!(matches!(branch_characters(&s), Err(Error::Overflow(_))));
    }

    #[test]
    fn identities_pass_and_fail_as_expected() {
        for s in [veronese(2).unwrap(), k3(3).unwrap()] {
            let c = branch_characters(&s).unwrap();
            let report = verify_character_identities(&s, &c);
            assert_eq!(report.checks.len(), 4);
            assert!(report.all_passed(), "{report:?}");
        }
        let s = veronese(2).unwrap();
        let mut c = branch_characters(&s).unwrap();
        c.n += 1;
        let report = verify_character_identities(&s, &c);
        assert!(!report.get(CHECK_TWO_N_THREE_K).unwrap().passed);
        assert!(!report.get(CHECK_TWO_N_TWO_K).unwrap().passed);
        assert!(!report.get(CHECK_R_DOT_R0).unwrap().passed);
        assert!(report.get(CHECK_HURWITZ).unwrap().passed);
    }

    #[test]
    fn ramification_classes_for_k3() {
        let s = k3(9).unwrap();
        let r = RamificationClasses::of(&s).unwrap();
        assert_eq!(r.r_class, (1, 3));
        assert_eq!(r.r0_class, (-2, 42));
        // (3H)(42H) = 126 * 16
        assert_eq!(r.r_dot_r0, 2016);
        assert_eq!(r.r_dot_r0, 2 * (840 + 168));
    }
}
