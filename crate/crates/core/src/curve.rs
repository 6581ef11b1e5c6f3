//! Smooth plane curves and linear projections: smoothness certification,
//! branch divisors of projections, genericity of centers, and the group of
//! plane automorphisms fixing a center and preserving its pencil of lines.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{
    monomials, rank, restrict_to_pencil, AlgebraError, BinaryForm, FieldTag, HomogPoly, Mat3,
    RootEntry, Scalar, UniPoly,
};
use crate::hurwitz::Partition;
use crate::pointconf::{PointConfError, PointP2};
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveError {
    Algebra(AlgebraError),
    Points(PointConfError),
    ZeroCurve,
    NotSmooth(String),
    CenterOnCurve(PointP2),
    DegreeMismatch { left: usize, right: usize },
    UnsupportedField(String),
    SearchCapExceeded { candidates: u64, cap: u64 },
    InvalidGroupElement(String),
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::Algebra(e) => write!(f, "{}", e),
            CurveError::Points(e) => write!(f, "{}", e),
            CurveError::ZeroCurve => write!(f, "the zero polynomial defines no curve"),
            CurveError::NotSmooth(s) => write!(f, "curve is not smooth: {}", s),
            CurveError::CenterOnCurve(p) => write!(f, "center {} lies on the curve", p),
            CurveError::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {} vs {}", left, right)
            }
            CurveError::UnsupportedField(s) => write!(f, "unsupported field: {}", s),
            CurveError::SearchCapExceeded { candidates, cap } => {
                write!(f, "search space {} exceeds cap {}", candidates, cap)
            }
            CurveError::InvalidGroupElement(s) => write!(f, "invalid group element: {}", s),
        }
    }
}

impl From<AlgebraError> for CurveError {
    fn from(e: AlgebraError) -> Self {
        CurveError::Algebra(e)
    }
}

impl From<PointConfError> for CurveError {
    fn from(e: PointConfError) -> Self {
        CurveError::Points(e)
    }
}

/// Verdict of the smoothness test. The test is decisive over both supported
/// fields; when the singular locus has no rational point the verdict still
/// reports singularity, just without a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Smoothness {
    Smooth,
    SingularAt(PointP2),
    SingularOverExtension,
}

impl Smoothness {
    pub fn is_smooth(&self) -> bool {
        matches!(self, Smoothness::Smooth)
    }
}

/// A plane projective curve of degree `d >= 1`. The genus field follows the
/// smooth-curve convention `(d-1)(d-2)/2` regardless of certification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    poly: HomogPoly,
}

impl PlaneCurve {
    pub fn new(poly: HomogPoly) -> Result<Self, CurveError> {
        if poly.is_zero() || poly.degree() == 0 {
            return Err(CurveError::ZeroCurve);
        }
        Ok(PlaneCurve { poly })
    }

    pub fn poly(&self) -> &HomogPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn field(&self) -> FieldTag {
        self.poly.field()
    }

    pub fn genus(&self) -> usize {
        let d = self.degree();
        (d - 1) * (d - 2) / 2
    }

    pub fn contains(&self, p: &PointP2) -> bool {
        self.poly.eval(p.coords()).is_zero()
    }

    /// All rational points over a prime field, in the fixed plane order.
    pub fn rational_points(&self) -> Result<Vec<PointP2>, CurveError> {
        match self.field() {
            FieldTag::PrimeField(p) => Ok(crate::rng::enumerate_plane_points(p)
                .into_iter()
                .filter(|pt| self.contains(pt))
                .collect()),
            FieldTag::Rationals => Err(CurveError::UnsupportedField(String::from(
                "point enumeration needs a finite field",
            ))),
        }
    }

    /// Decides smoothness of the projective curve over the algebraic closure.
    ///
    /// A rational singular point is searched first (exhaustively over `F_p`,
    /// by resultant elimination and lifting over `Q`). The decisive step is
    /// an ideal-membership rank test: the partials (together with `F` itself
    /// when the characteristic divides `d`) have no common projective zero
    /// iff they generate everything in one explicit degree.
    pub fn smoothness(&self) -> Smoothness {
        let d = self.degree();
        let f = &self.poly;
        let partials = [f.partial(0), f.partial(1), f.partial(2)];
        if d == 1 {
            return Smoothness::Smooth;
        }
        if let Some(p) = self.rational_singular_witness(&partials) {
            return Smoothness::SingularAt(p);
        }
        let char_divides_d = match self.field() {
            FieldTag::Rationals => false,
            FieldTag::PrimeField(p) => (d as u64) % p == 0,
        };
        let empty = if char_divides_d {
            // Lazard degree bound for four forms of degrees (d, d-1, d-1, d-1).
            let target = 3 * d - 4;
            let mut forms: Vec<&HomogPoly> = partials.iter().collect();
            forms.push(f);
            ideal_contains_all_in_degree(&forms, target)
        } else {
            // Macaulay bound for the three degree-(d-1) partials.
            let target = 3 * d - 5;
            ideal_contains_all_in_degree(&[&partials[0], &partials[1], &partials[2]], target)
        };
        if empty {
            Smoothness::Smooth
        } else {
            Smoothness::SingularOverExtension
        }
    }

    pub fn certify_smooth(&self) -> Result<(), CurveError> {
        match self.smoothness() {
            Smoothness::Smooth => Ok(()),
            Smoothness::SingularAt(p) => Err(CurveError::NotSmooth(alloc::format!(
                "singular at {}",
                p
            ))),
            Smoothness::SingularOverExtension => Err(CurveError::NotSmooth(String::from(
                "singular over a field extension",
            ))),
        }
    }

    fn rational_singular_witness(&self, partials: &[HomogPoly; 3]) -> Option<PointP2> {
        let f = &self.poly;
        let on_curve_and_singular = |pt: &PointP2| {
            f.eval(pt.coords()).is_zero()
                && partials.iter().all(|g| g.eval(pt.coords()).is_zero())
        };
        match self.field() {
            FieldTag::PrimeField(p) => crate::rng::enumerate_plane_points(p)
                .into_iter()
                .find(on_curve_and_singular),
            FieldTag::Rationals => {
                let field = FieldTag::Rationals;
                // Coordinate points and a few cheap candidates first.
                for (x, y, z) in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)] {
                    let pt = PointP2::from_ints(x, y, z, field).ok()?;
                    if on_curve_and_singular(&pt) {
                        return Some(pt);
                    }
                }
                for cand in elimination_candidates(partials) {
                    for pt in lift_candidates(partials, &cand) {
                        if on_curve_and_singular(&pt) {
                            return Some(pt);
                        }
                    }
                }
                None
            }
        }
    }
}

/// True iff the span of `{m * g : g in forms, m monomial}` is all of the
/// homogeneous piece of the target degree. By the effective projective
/// Nullstellensatz this happens exactly when the forms have no common zero
/// over the closure, provided the target degree meets the Macaulay/Lazard
/// bound for the given degrees.
fn ideal_contains_all_in_degree(forms: &[&HomogPoly], target: usize) -> bool {
    let field = forms[0].field();
    let cols = monomials(target);
    let ncols = cols.len();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for g in forms {
        if g.is_zero() {
            continue;
        }
        let shift = target - g.degree();
        for m in monomials(shift) {
            let mut row = alloc::vec![Scalar::zero(field); ncols];
            for (e, c) in g.terms() {
                let key = [e[0] + m[0], e[1] + m[1], e[2] + m[2]];
                let idx = cols.binary_search(&key).expect("degree bookkeeping");
                row[idx] = row[idx].add(c);
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return false;
    }
    rank(&rows, field) == ncols
}

/// Writes a ternary form as a polynomial in `z` whose coefficients are
/// binary forms in `(x, y)`; entry `k` multiplies `z^k`.
fn z_coefficients(f: &HomogPoly) -> Vec<BinaryForm> {
    let d = f.degree();
    let field = f.field();
    let mut out: Vec<BinaryForm> = (0..=d)
        .map(|k| BinaryForm::zero(field, d - k))
        .collect();
    for (e, c) in f.terms() {
        let k = e[2] as usize;
        out[k].coeffs[e[0] as usize] = out[k].coeffs[e[0] as usize].add(c);
    }
    out
}

/// Best-effort candidates `(x0, y0)` for common zeros of the given forms,
/// from pairwise resultants eliminating `z` in both affine charts.
fn elimination_candidates(forms: &[HomogPoly; 3]) -> Vec<[Scalar; 2]> {
    let field = forms[0].field();
    let mut out: Vec<[Scalar; 2]> = Vec::new();
    for swap_xy in [false, true] {
        let mut res: Vec<UniPoly> = Vec::new();
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            if let Some(r) = res_z_chart(&forms[a], &forms[b], swap_xy) {
                if !r.is_zero() {
                    res.push(r);
                }
            }
        }
        let mut g = match res.first() {
            Some(first) => first.clone(),
            None => continue,
        };
        for r in &res[1..] {
            g = g.gcd(r);
        }
        if g.is_constant() {
            continue;
        }
        for root in crate::algebra::rational_roots(&g) {
            let cand = if swap_xy {
                [Scalar::one(field), root]
            } else {
                [root, Scalar::one(field)]
            };
            if !out.contains(&cand) {
                out.push(cand);
            }
        }
    }
    out
}

/// Resultant of two ternary forms with respect to `z`, dehomogenized in the
/// chart `y = 1` (or `x = 1` when `swap_xy`). `None` when either form is
/// z-free (the caller falls back to other pairs).
fn res_z_chart(f: &HomogPoly, g: &HomogPoly, swap_xy: bool) -> Option<UniPoly> {
    let field = f.field();
    let dehom = |b: &BinaryForm| -> UniPoly {
        // coeffs[i] * x^i y^(n-i) -> chart y=1 keeps index i; chart x=1 flips.
        let cs: Vec<Scalar> = if swap_xy {
            b.coeffs.iter().rev().cloned().collect()
        } else {
            b.coeffs.clone()
        };
        UniPoly::new(field, cs)
    };
    let fz: Vec<UniPoly> = z_coefficients(f).iter().map(&dehom).collect();
    let gz: Vec<UniPoly> = z_coefficients(g).iter().map(&dehom).collect();
    let zdeg = |v: &[UniPoly]| v.iter().rposition(|c| !c.is_zero());
    let (df, dg) = (zdeg(&fz)?, zdeg(&gz)?);
    if df == 0 || dg == 0 {
        return None;
    }
    let n = df + dg;
    let zero = UniPoly::zero(field);
    let mut syl = alloc::vec![alloc::vec![zero; n]; n];
    for r in 0..dg {
        for m in 0..=df {
            syl[r][r + m] = fz[df - m].clone();
        }
    }
    for r in 0..df {
        for m in 0..=dg {
            syl[dg + r][r + m] = gz[dg - m].clone();
        }
    }
    Some(crate::algebra::bareiss_det(syl))
}

/// Lifts a candidate `(x0, y0)` by intersecting the univariate
/// specializations in `z`; returns the rational candidate points.
fn lift_candidates(forms: &[HomogPoly; 3], cand: &[Scalar; 2]) -> Vec<PointP2> {
    let field = forms[0].field();
    let specialize = |f: &HomogPoly| -> UniPoly {
        let cs = z_coefficients(f)
            .iter()
            .map(|b| b.eval_at(&cand[0], &cand[1]))
            .collect();
        UniPoly::new(field, cs)
    };
    let mut h: Option<UniPoly> = None;
    for f in forms {
        let s = specialize(f);
        if s.is_zero() {
            continue;
        }
        h = Some(match h {
            None => s,
            Some(prev) => prev.gcd(&s),
        });
    }
    let h = match h {
        Some(h) if !h.is_constant() => h,
        _ => return Vec::new(),
    };
    crate::algebra::rational_roots(&h)
        .into_iter()
        .filter_map(|z0| PointP2::new([cand[0].clone(), cand[1].clone(), z0]).ok())
        .collect()
}

/// Number of branch points of a generic degree-d projection, from the
/// genus count: `2g + 2d - 2`, which equals `d(d-1)`.
pub fn riemann_hurwitz_w(d: usize) -> usize {
    assert!(d >= 1);
    let g = (d - 1) * (d - 2) / 2;
    let w = 2 * g + 2 * d - 2;
    assert_eq!(w, d * (d - 1));
    w
}

/// One branch locus of a projection: a pencil parameter (or unsplit factor)
/// with its discriminant multiplicity, and the fiber's branch type when the
/// locus is a rational point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchPoint {
    pub locus: RootEntry,
    pub fiber_type: Option<Partition>,
}

/// Branch divisor of the projection from `center`: the discriminant's root
/// structure on the pencil line, with multiplicities summing to `d(d-1)`.
#[derive(Clone, Debug)]
pub struct BranchDivisor {
    pub center: PointP2,
    pub discriminant: BinaryForm,
    pub points: Vec<BranchPoint>,
    pub total: usize,
    pub simple_count: usize,
}

impl BranchDivisor {
    /// Equality of branch data: same normalized discriminant and the same
    /// locus/multiplicity table.
    pub fn same_branch_data(&self, other: &BranchDivisor) -> bool {
        normalize_form(&self.discriminant) == normalize_form(&other.discriminant)
            && self.points == other.points
    }
}

fn normalize_form(b: &BinaryForm) -> BinaryForm {
    match b.coeffs.iter().find(|c| !c.is_zero()) {
        None => b.clone(),
        Some(first) => b.scale(&first.inv().expect("nonzero")),
    }
}

/// Branch type of a fiber polynomial: root multiplicities over the closure,
/// read off the squarefree decomposition (a squarefree factor of degree k at
/// multiplicity m contributes k parts equal to m).
fn fiber_partition(fiber: &UniPoly, d: usize) -> Partition {
    assert_eq!(fiber.degree(), Some(d), "fiber degree must equal d");
    let mut parts: Vec<usize> = Vec::new();
    for (factor, mult) in fiber.squarefree_decomposition() {
        let deg = factor.degree().unwrap();
        for _ in 0..deg {
            parts.push(mult);
        }
    }
    Partition::new(parts).expect("multiplicities sum to the degree")
}

/// Branch divisor of the projection of a smooth curve from a center off the
/// curve: pencil restriction, discriminant, root multiplicities, and fiber
/// branch types at split branch parameters.
pub fn project_branch_divisor(
    curve: &PlaneCurve,
    center: &PointP2,
) -> Result<BranchDivisor, CurveError> {
    if curve.contains(center) {
        return Err(CurveError::CenterOnCurve(center.clone()));
    }
    curve.certify_smooth()?;
    let d = curve.degree();
    let restriction = restrict_to_pencil(curve.poly(), center.coords())?;
    let disc = restriction.discriminant()?;
    let entries = disc.roots()?;
    let mut points = Vec::new();
    let mut simple_count = 0usize;
    for entry in entries {
        let fiber_type = match &entry {
            RootEntry::Point(p1, mult) => {
                if *mult == 1 {
                    simple_count += 1;
                }
                let fiber = restriction.fiber_at(&p1.coords()[0], &p1.coords()[1]);
                let ft = fiber_partition(&fiber, d);
                assert!(
                    ft.parts().iter().any(|&m| m > 1),
                    "discriminant root must ramify the fiber"
                );
                Some(ft)
            }
            RootEntry::Factor(..) => None,
        };
        points.push(BranchPoint {
            locus: entry,
            fiber_type,
        });
    }
    let total: usize = points
        .iter()
        .map(|bp| bp.locus.multiplicity() * bp.locus.locus_degree())
        .sum();
    assert_eq!(total, d * (d - 1), "branch divisor total");
    Ok(BranchDivisor {
        center: center.clone(),
        discriminant: disc,
        points,
        total,
        simple_count,
    })
}

/// A center is generic when the discriminant is squarefree and every split
/// branch fiber has simple type `(2, 1, ..., 1)`. The two conditions agree
/// (a squarefree discriminant forces simple fibers); both are computed and
/// cross-checked.
pub fn is_generic_center(curve: &PlaneCurve, center: &PointP2) -> Result<bool, CurveError> {
    let divisor = project_branch_divisor(curve, center)?;
    let squarefree = divisor.discriminant.is_squarefree()?;
    let d = curve.degree();
    let fibers_simple = divisor.points.iter().all(|bp| match &bp.fiber_type {
        Some(t) => t.is_simple(d),
        None => true,
    });
    if squarefree {
        assert!(
            fibers_simple,
            "squarefree discriminant must give simple fibers"
        );
        let all_split = divisor
            .points
            .iter()
            .all(|bp| matches!(bp.locus, RootEntry::Point(..)));
        if all_split {
            assert_eq!(divisor.simple_count, d * (d - 1));
        }
    }
    Ok(squarefree && fibers_simple)
}

/// An automorphism of the plane fixing `center` and sending every line
/// through it to a line through it. In coordinates where the center is
/// `[0:1:0]` the matrix is rows `(g0,0,0; g1,g2,g3; 0,0,g0)` with
/// `g0*g2 != 0`; for other centers the same data is conjugated by the
/// deterministic pencil basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpElement {
    center: PointP2,
    g: [Scalar; 4],
}

impl GpElement {
    pub fn new(
        center: PointP2,
        g0: Scalar,
        g1: Scalar,
        g2: Scalar,
        g3: Scalar,
    ) -> Result<Self, CurveError> {
        if g0.mul(&g2).is_zero() {
            return Err(CurveError::InvalidGroupElement(String::from(
                "g0 * g2 must be nonzero",
            )));
        }
        Ok(GpElement {
            center,
            g: [g0, g1, g2, g3],
        })
    }

    pub fn identity(center: PointP2) -> Self {
        let field = center.field();
        GpElement {
            center,
            g: [
                Scalar::one(field),
                Scalar::zero(field),
                Scalar::one(field),
                Scalar::zero(field),
            ],
        }
    }

    pub fn center(&self) -> &PointP2 {
        &self.center
    }

    pub fn components(&self) -> &[Scalar; 4] {
        &self.g
    }

    fn normalized_matrix(&self) -> Mat3 {
        let field = self.center.field();
        let z = || Scalar::zero(field);
        Mat3 {
            rows: [
                [self.g[0].clone(), z(), z()],
                [self.g[1].clone(), self.g[2].clone(), self.g[3].clone()],
                [z(), z(), self.g[0].clone()],
            ],
        }
    }

    /// Matrix acting on the original coordinates: the normalized form
    /// conjugated by the pencil basis of the center.
    pub fn matrix(&self) -> Mat3 {
        let basis = crate::algebra::pencil_basis(self.center.field(), self.center.coords());
        let inv = basis.inverse().expect("basis is invertible");
        basis.mul_mat(&self.normalized_matrix()).mul_mat(&inv)
    }

    /// Group inverse, up to projective scale: `(g2, -g1, g0, -g3)`.
    pub fn inverse(&self) -> GpElement {
        GpElement {
            center: self.center.clone(),
            g: [
                self.g[2].clone(),
                self.g[1].neg(),
                self.g[0].clone(),
                self.g[3].neg(),
            ],
        }
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &GpElement) -> Result<GpElement, CurveError> {
        if self.center != other.center {
            return Err(CurveError::InvalidGroupElement(String::from(
                "different centers",
            )));
        }
        let (a, b) = (&self.g, &other.g);
        GpElement::new(
            self.center.clone(),
            a[0].mul(&b[0]),
            a[1].mul(&b[0]).add(&a[2].mul(&b[1])),
            a[2].mul(&b[2]),
            a[2].mul(&b[3]).add(&a[3].mul(&b[0])),
        )
    }
}

/// Image of the curve under the group element: the defining polynomial
/// composed with the inverse matrix (so points map forward).
pub fn gp_apply(g: &GpElement, curve: &PlaneCurve) -> Result<PlaneCurve, CurveError> {
    if g.center().field() != curve.field() {
        return Err(CurveError::Algebra(AlgebraError::FieldMismatch {
            left: g.center().field(),
            right: curve.field(),
        }));
    }
    let minv = g.inverse().matrix();
    PlaneCurve::new(curve.poly().substitute(&minv))
}

/// Exhaustive search over the center-fixing group of a prime field for an
/// element carrying one curve to the other (as projective curves). The
/// branch divisor comparison runs first as a fast necessary filter.
pub fn projections_equivalent(
    c1: &PlaneCurve,
    c2: &PlaneCurve,
    center: &PointP2,
    cap: Option<u64>,
) -> Result<Option<GpElement>, CurveError> {
    let p = match c1.field() {
        FieldTag::PrimeField(p) => p,
        FieldTag::Rationals => {
            return Err(CurveError::UnsupportedField(String::from(
                "equivalence search needs a finite field (use gp_apply to verify over Q)",
            )))
        }
    };
    if c1.degree() != c2.degree() {
        return Err(CurveError::DegreeMismatch {
            left: c1.degree(),
            right: c2.degree(),
        });
    }
    for c in [c1, c2] {
        if c.contains(center) {
            return Err(CurveError::CenterOnCurve(center.clone()));
        }
        c.certify_smooth()?;
    }
    let candidates = p * p * (p - 1);
    let cap = cap.unwrap_or(200_000);
    if candidates > cap {
        return Err(CurveError::SearchCapExceeded { candidates, cap });
    }
    let b1 = project_branch_divisor(c1, center)?;
    let b2 = project_branch_divisor(c2, center)?;
    if !b1.same_branch_data(&b2) {
        return Ok(None);
    }
    let s = |v: u64| Scalar::Fp { p, val: v };
    for g2 in 1..p {
        for g1 in 0..p {
            for g3 in 0..p {
                let g = GpElement::new(center.clone(), s(1), s(g1), s(g2), s(g3))?;
                let image = gp_apply(&g, c1)?;
                if image.poly().proportional(c2.poly()) {
                    return Ok(Some(g));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    const Q: FieldTag = FieldTag::Rationals;
    const F7: FieldTag = FieldTag::PrimeField(7);

    fn curve(s: &str, field: FieldTag) -> PlaneCurve {
        PlaneCurve::new(parse_poly(s, Some(field)).unwrap()).unwrap()
    }

    fn pt(x: i64, y: i64, z: i64, field: FieldTag) -> PointP2 {
        PointP2::from_ints(x, y, z, field).unwrap()
    }

    #[test]
    fn fermat_cubic_is_smooth_over_q() {
        let c = curve("x^3 + y^3 + z^3", Q);
        assert_eq!(c.smoothness(), Smoothness::Smooth);
    }

    #[test]
    fn cuspidal_cubic_singular_at_origin() {
        let c = curve("y^2*z - x^3", Q);
        assert_eq!(c.smoothness(), Smoothness::SingularAt(pt(0, 0, 1, Q)));
    }

    #[test]
    fn triangle_of_lines_is_singular() {
        let c = curve("x*y*z", Q);
        match c.smoothness() {
            Smoothness::SingularAt(p) => {
                // Any coordinate point qualifies.
                let coords = [pt(1, 0, 0, Q), pt(0, 1, 0, Q), pt(0, 0, 1, Q)];
                assert!(coords.contains(&p));
            }
            other => panic!("expected a singular point, got {:?}", other),
        }
    }

    #[test]
    fn nodal_cubic_singular() {
        let c = curve("y^2*z - x^3 - x^2*z", Q);
        assert_eq!(c.smoothness(), Smoothness::SingularAt(pt(0, 0, 1, Q)));
    }

    #[test]
    fn smoothness_over_f7_matches_scan() {
        let smooth = curve("x^3 + y^3 + z^3", F7);
        assert!(smooth.smoothness().is_smooth());
        let cusp = curve("y^2*z - x^3", F7);
        assert_eq!(cusp.smoothness(), Smoothness::SingularAt(pt(0, 0, 1, F7)));
    }

    #[test]
    fn smooth_conic_and_degenerate_conic() {
        assert!(curve("x*z - y^2", Q).smoothness().is_smooth());
        match curve("x^2 - y^2", Q).smoothness() {
            Smoothness::SingularAt(p) => assert_eq!(p, pt(0, 0, 1, Q)),
            other => panic!("two crossing lines are singular, got {:?}", other),
        }
    }

    #[test]
    fn extension_only_singularity_is_detected() {
        // (x^2 - 2 z^2) y = x^2 y - 2 y z^2: two lines x = +-sqrt(2) z and y = 0
        // meet at irrational points; singular with no rational witness among
        // the crossing points of the two irrational lines... but [1:0:0]?
        // F = x^2 y - 2 y z^2: partials: (2xy, x^2 - 2z^2, -4yz).
        // At [1:0:0]: (0, 1, 0) nonzero; at [0:1:0]: (0,0,0) and F=0: rational witness.
        let c = curve("x^2*y - 2*y*z^2", Q);
        assert_eq!(c.smoothness(), Smoothness::SingularAt(pt(0, 1, 0, Q)));
        // A genuinely irrational singular locus: x^3 - 2 z^3 + ... use
        // y z^2 + x^3 - 2z^3 singular where? Partials: (3x^2, z^2, 2yz - 6z^2).
        // Common zeros need z = 0 (from f_y), then x = 0, giving [0:1:0];
        // F(0,1,0) = 0, so this is a rational singular point after all.
        let c2 = curve("y*z^2 + x^3 - 2*z^3", Q);
        assert_eq!(c2.smoothness(), Smoothness::SingularAt(pt(0, 1, 0, Q)));
    }

    #[test]
    fn riemann_hurwitz_values() {
        assert_eq!(riemann_hurwitz_w(1), 0);
        assert_eq!(riemann_hurwitz_w(2), 2);
        assert_eq!(riemann_hurwitz_w(3), 6);
        assert_eq!(riemann_hurwitz_w(4), 12);
        for d in 1..=50 {
            riemann_hurwitz_w(d); // internal identity assertion
        }
    }

    #[test]
    fn fermat_cubic_flex_center_branching() {
        // Projection of the Fermat cubic from [0:1:0]: three branch points of
        // multiplicity 2, each with fiber type (3); total 6 = 3 * 2.
        let c = curve("x^3 + y^3 + z^3", F7);
        let b = project_branch_divisor(&c, &pt(0, 1, 0, F7)).unwrap();
        assert_eq!(b.total, 6);
        assert_eq!(b.points.len(), 3);
        for bp in &b.points {
            assert_eq!(bp.locus.multiplicity(), 2);
            assert_eq!(
                bp.fiber_type.as_ref().unwrap().parts(),
                &[3],
                "total ramification above each branch point"
            );
        }
        assert_eq!(b.simple_count, 0);
        assert!(!is_generic_center(&c, &pt(0, 1, 0, F7)).unwrap());
    }

    #[test]
    fn fermat_cubic_flex_center_branching_over_q() {
        let c = curve("x^3 + y^3 + z^3", Q);
        let b = project_branch_divisor(&c, &pt(0, 1, 0, Q)).unwrap();
        assert_eq!(b.total, 6);
        // Over Q: rational branch point [-1:1] and an unsplit quadratic factor.
        let mut rational = 0;
        let mut factors = 0;
        for bp in &b.points {
            match &bp.locus {
                RootEntry::Point(_, m) => {
                    rational += 1;
                    assert_eq!(*m, 2);
                    assert_eq!(bp.fiber_type.as_ref().unwrap().parts(), &[3]);
                }
                RootEntry::Factor(f, m) => {
                    factors += 1;
                    assert_eq!(*m, 2);
                    assert_eq!(f.degree, 2);
                }
            }
        }
        assert_eq!((rational, factors), (1, 1));
    }

    #[test]
    fn conic_generic_projection() {
        let c = curve("x*z - y^2", Q);
        let center = pt(0, 1, 0, Q);
        assert!(!c.contains(&center));
        let b = project_branch_divisor(&c, &center).unwrap();
        assert_eq!(b.total, 2);
        assert!(is_generic_center(&c, &center).unwrap());
        for bp in &b.points {
            assert_eq!(bp.locus.multiplicity(), 1);
            if let Some(t) = &bp.fiber_type {
                assert!(t.is_simple(2));
            }
        }
    }

    #[test]
    fn center_on_curve_rejected() {
        let c = curve("x^3 + y^3 + z^3", F7);
        let p = pt(1, -1, 0, F7);
        assert!(c.contains(&p));
        assert!(matches!(
            project_branch_divisor(&c, &p),
            Err(CurveError::CenterOnCurve(_))
        ));
    }

    #[test]
    fn singular_curve_rejected() {
        let c = curve("y^2*z - x^3", F7);
        let p = pt(0, 1, 0, F7);
        assert!(matches!(
            project_branch_divisor(&c, &p),
            Err(CurveError::NotSmooth(_))
        ));
    }

    #[test]
    fn gp_identity_acts_trivially() {
        let c = curve("x^3 + y^3 + z^3", Q);
        let g = GpElement::identity(pt(0, 1, 0, Q));
        assert_eq!(gp_apply(&g, &c).unwrap(), c);
    }

    #[test]
    fn gp_scaling_example() {
        // (g0,g1,g2,g3) = (1,0,2,0) at center [0:1:0] sends y to 2y, so the
        // image curve is F(x, y/2, z) ~ 8x^3 + y^3 + 8z^3.
        let c = curve("x^3 + y^3 + z^3", Q);
        let g = GpElement::new(
            pt(0, 1, 0, Q),
            Scalar::one(Q),
            Scalar::zero(Q),
            Scalar::from_i64(2, Q),
            Scalar::zero(Q),
        )
        .unwrap();
        let image = gp_apply(&g, &c).unwrap();
        let expected = parse_poly("8*x^3 + y^3 + 8*z^3", Some(Q)).unwrap();
        assert!(image.poly().proportional(&expected));
    }

    #[test]
    fn gp_group_law() {
        let center = pt(1, 2, 3, F7);
        let s = |v: i64| Scalar::from_i64(v, F7);
        let g = GpElement::new(center.clone(), s(2), s(1), s(3), s(5)).unwrap();
        let h = GpElement::new(center.clone(), s(1), s(4), s(2), s(6)).unwrap();
        let c = curve("x^4 + y^4 + z^4 + x*y*z^2", F7);
        // Action property: (g h)(C) = g(h(C)).
        let lhs = gp_apply(&g.compose(&h).unwrap(), &c).unwrap();
        let rhs = gp_apply(&g, &gp_apply(&h, &c).unwrap()).unwrap();
        assert!(lhs.poly().proportional(rhs.poly()));
        // Inverse composes to a projective identity.
        let gi = g.compose(&g.inverse()).unwrap();
        let back = gp_apply(&gi, &c).unwrap();
        assert!(back.poly().proportional(c.poly()));
    }

    #[test]
    fn gp_preserves_branch_divisor() {
        let center = pt(0, 1, 0, F7);
        let c = curve("x^3 + y^3 + z^3 + x*y*z", F7);
        assert!(c.smoothness().is_smooth());
        let s = |v: i64| Scalar::from_i64(v, F7);
        let g = GpElement::new(center.clone(), s(1), s(3), s(2), s(4)).unwrap();
        let image = gp_apply(&g, &c).unwrap();
        let b1 = project_branch_divisor(&c, &center).unwrap();
        let b2 = project_branch_divisor(&image, &center).unwrap();
        assert!(b1.same_branch_data(&b2));
    }

    #[test]
    fn equivalence_roundtrip_over_f5() {
        let f5 = FieldTag::PrimeField(5);
        let center = pt(0, 1, 0, f5);
        let c1 = curve("x^3 + y^3 + z^3 + x*y*z", f5);
        assert!(c1.smoothness().is_smooth());
        let s = |v: i64| Scalar::from_i64(v, f5);
        let g = GpElement::new(center.clone(), s(1), s(2), s(3), s(1)).unwrap();
        let c2 = gp_apply(&g, &c1).unwrap();
        let found = projections_equivalent(&c1, &c2, &center, None)
            .unwrap()
            .expect("equivalence must be found");
        let image = gp_apply(&found, &c1).unwrap();
        assert!(image.poly().proportional(c2.poly()));
        // Same curve: some stabilizer element is found.
        assert!(projections_equivalent(&c1, &c1, &center, None)
            .unwrap()
            .is_some());
    }

    #[test]
    fn equivalence_search_cap() {
        let f101 = FieldTag::PrimeField(101);
        let c = curve("x^3 + y^3 + z^3", f101);
        let center = pt(0, 1, 0, f101);
        assert!(matches!(
            projections_equivalent(&c, &c, &center, Some(1000)),
            Err(CurveError::SearchCapExceeded { .. })
        ));
    }
}
