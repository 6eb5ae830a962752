//! Bounded scan of `tan^2 a1 - tan^2 a = tan^2 psi` over a common
//! denominator `t`.
//!
//! With `tan a = p/t`, `tan psi = q/t` and `tan a1 = h/t` the equation is
//! the Pythagorean relation `p^2 + q^2 = h^2`. An angle with tangent `x/t`
//! is Heron exactly when `t^2 + x^2` is a square. Two Heron angles out of
//! three give an Euler brick, a face cuboid or an edge cuboid; all three
//! would be a perfect cuboid.

use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::exactnum::{is_square_u64, rat, Rational};
use crate::report::Report;

pub const DEFAULT_BOUND_FACTOR: u64 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AngleClass {
    Heron,
    #[serde(rename = "Euler-only")]
    EulerOnly,
}

impl AngleClass {
    pub fn is_heron(self) -> bool {
        self == AngleClass::Heron
    }
}

impl fmt::Display for AngleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AngleClass::Heron => "Heron",
            AngleClass::EulerOnly => "Euler-only",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RecordKind {
    #[serde(rename = "euler-brick")]
    EulerBrick,
    #[serde(rename = "face-cuboid")]
    FaceCuboid,
    #[serde(rename = "edge-cuboid")]
    EdgeCuboid,
    #[serde(rename = "none")]
    None,
    #[serde(rename = "PERFECT")]
    Perfect,
}

impl RecordKind {
    pub fn of(alpha: AngleClass, psi: AngleClass, alpha1: AngleClass) -> Self {
        match (alpha.is_heron(), psi.is_heron(), alpha1.is_heron()) {
            (true, true, true) => RecordKind::Perfect,
            (true, true, false) => RecordKind::EulerBrick,
            (false, true, true) => RecordKind::FaceCuboid,
            (true, false, true) => RecordKind::EdgeCuboid,
            _ => RecordKind::None,
        }
    }
}

impl fmt::Display for RecordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecordKind::EulerBrick => "euler-brick",
            RecordKind::FaceCuboid => "face-cuboid",
            RecordKind::EdgeCuboid => "edge-cuboid",
            RecordKind::None => "none",
            RecordKind::Perfect => "PERFECT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanRecord {
    pub t: u64,
    pub leg_a: u64,
    pub leg_w: u64,
    pub hyp: u64,
    pub class_alpha: AngleClass,
    pub class_psi: AngleClass,
    pub class_alpha1: AngleClass,
    pub kind: RecordKind,
}

impl ScanRecord {
    pub fn new(t: u64, leg_a: u64, leg_w: u64, hyp: u64) -> Self {
        let class_alpha = classify_angle(leg_a, t);
        let class_psi = classify_angle(leg_w, t);
        let class_alpha1 = classify_angle(hyp, t);
        ScanRecord {
            t,
            leg_a,
            leg_w,
            hyp,
            class_alpha,
            class_psi,
            class_alpha1,
            kind: RecordKind::of(class_alpha, class_psi, class_alpha1),
        }
    }

    pub fn heron_count(&self) -> usize {
        [self.class_alpha, self.class_psi, self.class_alpha1]
            .iter()
            .filter(|c| c.is_heron())
            .count()
    }

    /// Recomputes every field from `(t, legA, legW, hyp)`.
    pub fn is_consistent(&self) -> bool {
        self.leg_a * self.leg_a + self.leg_w * self.leg_w == self.hyp * self.hyp
            && *self == ScanRecord::new(self.t, self.leg_a, self.leg_w, self.hyp)
    }
}

/// Heron iff `num^2 + den^2` is a perfect square.
pub fn classify_angle(num: u64, den: u64) -> AngleClass {
    if is_square_u64(num * num + den * den) {
        AngleClass::Heron
    } else {
        AngleClass::EulerOnly
    }
}

/// All Pythagorean triples `(a, b, c)` with `a < b < limit`, primitive or
/// not, sorted.
pub fn pythagorean_triples(limit: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    let mut m = 2u64;
    // The smaller leg of a primitive triple from (m, n) is at least 2m - 1.
    while 2 * m - 1 < limit {
        for n in 1..m {
            if (m - n).is_multiple_of(2) || m.gcd(&n) != 1 {
                continue;
            }
            let (x, y) = (m * m - n * n, 2 * m * n);
            let (a, b) = (x.min(y), x.max(y));
            if a >= limit {
                continue;
            }
            let c = m * m + n * n;
            let mut k = 1;
            while k * b < limit {
                out.push((k * a, k * b, k * c));
                k += 1;
            }
        }
        m += 1;
    }
    out.sort_unstable();
    out
}

/// Records for one denominator `t`, in ascending `(legA, legW)` order.
fn records_for(t: u64, triples: &[(u64, u64, u64)], bound: u64) -> Vec<ScanRecord> {
    let mut out = Vec::new();
    for &(a, b, c) in triples {
        if b >= bound {
            continue;
        }
        let rec = ScanRecord::new(t, a, b, c);
        if rec.heron_count() < 2 {
            continue;
        }
        if rec.class_alpha != rec.class_psi {
            out.push(ScanRecord::new(t, b, a, c));
        }
        out.push(rec);
    }
    out.sort_unstable();
    out
}

/// Every qualifying record with `t <= max_edge` and both legs below
/// `bound_factor * t`, ordered by `(t, legA, legW)`.
pub fn corollary_scan_with(max_edge: u64, bound_factor: u64) -> Vec<ScanRecord> {
    let triples = pythagorean_triples(max_edge.saturating_mul(bound_factor));
    let per_t: Vec<Vec<ScanRecord>> = (1..=max_edge)
        .into_par_iter()
        .map(|t| records_for(t, &triples, t * bound_factor))
        .collect();
    per_t.into_iter().flatten().collect()
}

pub fn corollary_scan(max_edge: u64) -> Vec<ScanRecord> {
    corollary_scan_with(max_edge, DEFAULT_BOUND_FACTOR)
}

/// Cosine and sine of an angle with tangent `num/den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AngleValues {
    /// Rational values and the generator.
    Heron {
        cos: Rational,
        sin: Rational,
        generator: Rational,
    },
    /// `cos = cos_num / sqrt(radicand)`, `sin = sin_num / sqrt(radicand)`.
    EulerOnly { cos_num: u64, sin_num: u64, radicand: u64 },
}

pub fn angle_values(num: u64, den: u64) -> AngleValues {
    let g = num.gcd(&den).max(1);
    let (p, q) = (num / g, den / g);
    let r = p * p + q * q;
    if is_square_u64(r) {
        let h = r.isqrt();
        let cast = |x: u64| x as i64;
        AngleValues::Heron {
            cos: rat(cast(q), cast(h)),
            sin: rat(cast(p), cast(h)),
            generator: rat(cast(p), cast(h + q)),
        }
    } else {
        AngleValues::EulerOnly {
            cos_num: q,
            sin_num: p,
            radicand: r,
        }
    }
}

fn heron(cos: (i64, i64), sin: (i64, i64), m: (i64, i64)) -> AngleValues {
    AngleValues::Heron {
        cos: rat(cos.0, cos.1),
        sin: rat(sin.0, sin.1),
        generator: rat(m.0, m.1),
    }
}

/// Rebuilds the displayed values of the Euler-brick and face-cuboid
/// configurations from their tangents alone.
pub fn verify_worked_examples() -> Report {
    let mut r = Report::new();
    let euler_only = |cos_num, sin_num, radicand| AngleValues::EulerOnly {
        cos_num,
        sin_num,
        radicand,
    };

    // Euler brick: t = 240.
    r.record("euler-brick-alpha1", angle_values(125, 240) == euler_only(48, 25, 2929));
    r.record(
        "euler-brick-alpha",
        angle_values(44, 240) == heron((60, 61), (11, 61), (1, 11)),
    );
    r.record(
        "euler-brick-psi",
        angle_values(117, 240) == heron((80, 89), (39, 89), (3, 13)),
    );
    r.record("euler-brick-relation", 125u64.pow(2) - 44u64.pow(2) == 117u64.pow(2));
    r.record(
        "euler-brick-kind",
        ScanRecord::new(240, 44, 117, 125).kind == RecordKind::EulerBrick,
    );

    // Face cuboid: t = 520.
    r.record(
        "face-cuboid-alpha1",
        angle_values(765, 520) == heron((104, 185), (153, 185), (9, 17)),
    );
    r.record(
        "face-cuboid-alpha",
        angle_values(756, 520) == euler_only(130, 189, 52621),
    );
    r.record(
        "face-cuboid-psi",
        angle_values(117, 520) == heron((40, 41), (9, 41), (1, 9)),
    );
    r.record("face-cuboid-relation", 765u64.pow(2) - 756u64.pow(2) == 117u64.pow(2));
    r.record(
        "face-cuboid-kind",
        ScanRecord::new(520, 756, 117, 765).kind == RecordKind::FaceCuboid,
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct search over all leg pairs, independent of triple generation.
    fn brute_force(max_edge: u64, bound_factor: u64) -> Vec<ScanRecord> {
        let mut out = Vec::new();
        for t in 1..=max_edge {
            let bound = t * bound_factor;
            for a in 1..bound {
                for b in 1..bound {
                    let h2 = a * a + b * b;
                    if !is_square_u64(h2) {
                        continue;
                    }
                    let rec = ScanRecord::new(t, a, b, h2.isqrt());
                    if rec.heron_count() >= 2 && (a < b || rec.class_alpha != rec.class_psi) {
                        out.push(rec);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_angle(44, 240), AngleClass::Heron);
        assert_eq!(classify_angle(125, 240), AngleClass::EulerOnly);
        assert_eq!(classify_angle(0, 1), AngleClass::Heron);
    }

    #[test]
    fn tiny_scan_is_empty() {
        assert!(corollary_scan(10).is_empty());
        assert!(brute_force(10, DEFAULT_BOUND_FACTOR).is_empty());
    }

    #[test]
    fn scan_matches_brute_force() {
        for (edge, factor) in [(24, 20), (60, 3), (120, 1)] {
            assert_eq!(
                corollary_scan_with(edge, factor),
                brute_force(edge, factor),
                "edge={edge}"
            );
        }
    }

    #[test]
    fn triples_are_complete_and_sorted() {
        let ts = pythagorean_triples(100);
        assert!(ts.contains(&(3, 4, 5)));
        assert!(!ts.iter().any(|&(_, b, _)| b >= 100));
        assert!(ts.contains(&(9, 12, 15)));
        assert!(ts.contains(&(65, 72, 97)));
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
        assert!(ts.iter().all(|&(a, b, c)| a < b && b < 100 && a * a + b * b == c * c));
    }

    #[test]
    fn euler_brick_found() {
        let recs = corollary_scan(240);
        let brick = ScanRecord::new(240, 44, 117, 125);
        assert_eq!(brick.kind, RecordKind::EulerBrick);
        assert!(recs.contains(&brick));
        assert!(recs.iter().all(ScanRecord::is_consistent));
        assert!(recs.iter().all(|r| r.kind != RecordKind::Perfect));
    }

    #[test]
    fn face_cuboid_and_swap() {
        let face = ScanRecord::new(520, 756, 117, 765);
        assert_eq!(face.kind, RecordKind::FaceCuboid);
        assert_eq!(ScanRecord::new(520, 117, 756, 765).kind, RecordKind::EdgeCuboid);
    }

    #[test]
    fn ordering_is_by_key() {
        let recs = corollary_scan(200);
        assert!(recs
            .windows(2)
            .all(|w| (w[0].t, w[0].leg_a, w[0].leg_w) < (w[1].t, w[1].leg_a, w[1].leg_w)));
    }

    #[test]
    fn worked_examples_reconstruct() {
        let r = verify_worked_examples();
        assert!(r.all_hold(), "{r}");
        assert_eq!(r.len(), 10);
    }

    #[test]
    fn csv_header() {
        let mut w = csv::Writer::from_writer(vec![]);
        w.serialize(ScanRecord::new(240, 44, 117, 125)).unwrap();
        let s = String::from_utf8(w.into_inner().unwrap()).unwrap();
        assert_eq!(
            s,
            "t,legA,legW,hyp,classAlpha,classPsi,classAlpha1,kind\n240,44,117,125,Heron,Heron,Euler-only,euler-brick\n"
        );
    }
}
