use std::fmt;

use crate::algebroid::multivector::{Multivector, Section};
use crate::algebroid::vector_field::{self, VectorField};
use crate::error::{Error, Result};
use crate::exact::{Chart, ChartRef, Polynomial};
use crate::verdict::{Verdict, Witness};

/// A Lie algebroid on a trivialized bundle over a polynomial chart: anchor
/// `a(e_alpha) = sum_i anchor[alpha][i] d/dx^i` and structure functions
/// `[e_alpha, e_beta] = sum_gamma structure[alpha][beta][gamma] e_gamma`.
///
/// Over the zero-dimensional chart this is a finite-dimensional Lie algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebroid {
    chart: ChartRef,
    frames: Vec<String>,
    anchor: Vec<Vec<Polynomial>>,
    structure: Vec<Vec<Vec<Polynomial>>>,
}

impl LieAlgebroid {
    pub fn new(
        chart: &ChartRef,
        frames: Vec<String>,
        anchor: Vec<Vec<Polynomial>>,
        structure: Vec<Vec<Vec<Polynomial>>>,
    ) -> Result<Self> {
        let r = frames.len();
        for (i, f) in frames.iter().enumerate() {
            if frames[..i].contains(f) {
                return Err(Error::Schema(format!("duplicate frame `{f}`")));
            }
        }
        if anchor.len() != r || anchor.iter().any(|row| row.len() != chart.dim()) {
            return Err(Error::Dimension(format!(
                "anchor must be {r} x {} for frames [{}]",
                chart.dim(),
                frames.join(", ")
            )));
        }
        if structure.len() != r
            || structure
                .iter()
                .any(|row| row.len() != r || row.iter().any(|v| v.len() != r))
        {
            return Err(Error::Dimension(format!("structure functions must be {r} x {r} x {r}")));
        }
        for p in anchor.iter().flatten().chain(structure.iter().flatten().flatten()) {
            Chart::ensure_same(chart, p.chart())?;
        }
        for a in 0..r {
            for b in a..r {
                for g in 0..r {
                    if structure[a][b][g] != -&structure[b][a][g] {
                        return Err(Error::Schema(format!(
                            "bracket({}, {}) is not antisymmetric",
                            frames[a], frames[b]
                        )));
                    }
                }
            }
        }
        Ok(LieAlgebroid {
            chart: chart.clone(),
            frames,
            anchor,
            structure,
        })
    }

    /// Builds from the brackets of frame pairs; unlisted pairs bracket to 0
    /// and the reversed pairs are filled in by antisymmetry.
    pub fn from_brackets(
        chart: &ChartRef,
        frames: Vec<String>,
        anchor: Vec<Vec<Polynomial>>,
        brackets: impl IntoIterator<Item = (usize, usize, Vec<Polynomial>)>,
    ) -> Result<Self> {
        let r = frames.len();
        let zero = Polynomial::zero(chart);
        let mut structure = vec![vec![vec![zero.clone(); r]; r]; r];
        let mut set = vec![vec![false; r]; r];
        for (a, b, v) in brackets {
            if a >= r || b >= r || v.len() != r {
                return Err(Error::Dimension("bracket index or length out of range".into()));
            }
            if a == b {
                if v.iter().any(|p| !p.is_zero()) {
                    return Err(Error::Schema(format!(
                        "bracket({0}, {0}) must be 0 by antisymmetry",
                        frames[a]
                    )));
                }
                continue;
            }
            let neg: Vec<Polynomial> = v.iter().map(|p| -p).collect();
            if set[a][b] && structure[a][b] != v {
                return Err(Error::Schema(format!(
                    "conflicting values for bracket({}, {})",
                    frames[a], frames[b]
                )));
            }
            structure[a][b] = v;
            structure[b][a] = neg;
            set[a][b] = true;
            set[b][a] = true;
        }
        LieAlgebroid::new(chart, frames, anchor, structure)
    }

    /// The tangent algebroid of a chart: frames `d/dx^i`, identity anchor,
    /// vanishing structure functions.
    pub fn tangent(chart: &ChartRef) -> Self {
        let n = chart.dim();
        let anchor = (0..n)
            .map(|a| {
                (0..n)
                    .map(|i| Polynomial::int(chart, (a == i) as i64))
                    .collect()
            })
            .collect();
        LieAlgebroid::from_brackets(chart, vector_field::coordinate_names(chart), anchor, [])
            .expect("tangent algebroid is well formed")
    }

    /// Zero anchor and zero bracket.
    pub fn abelian(chart: &ChartRef, frames: Vec<String>) -> Result<Self> {
        let anchor = vec![vector_field::zero(chart); frames.len()];
        LieAlgebroid::from_brackets(chart, frames, anchor, [])
    }

    pub fn chart(&self) -> &ChartRef {
        &self.chart
    }

    pub fn rank(&self) -> usize {
        self.frames.len()
    }

    pub fn frames(&self) -> &[String] {
        &self.frames
    }

    pub fn anchor(&self, alpha: usize) -> &[Polynomial] {
        &self.anchor[alpha]
    }

    pub fn anchor_matrix(&self) -> &[Vec<Polynomial>] {
        &self.anchor
    }

    pub fn structure(&self, alpha: usize, beta: usize) -> &[Polynomial] {
        &self.structure[alpha][beta]
    }

    pub fn structure_tensor(&self) -> &[Vec<Vec<Polynomial>>] {
        &self.structure
    }

    /// `a(e_alpha)(f)`.
    pub fn act(&self, alpha: usize, f: &Polynomial) -> Polynomial {
        vector_field::apply(&self.anchor[alpha], f)
    }

    pub fn anchor_of(&self, x: &Section) -> VectorField {
        let mut out = vector_field::zero(&self.chart);
        for (w, c) in x.components() {
            out = vector_field::add(&out, &vector_field::scale(c, &self.anchor[w[0]]));
        }
        out
    }

    pub fn frame(&self, alpha: usize) -> Section {
        Multivector::frame(&self.chart, self.rank(), alpha)
    }

    pub fn bracket_frames(&self, alpha: usize, beta: usize) -> Section {
        Multivector::section(&self.chart, self.structure[alpha][beta].clone())
    }

    pub(crate) fn check_section(&self, s: &Multivector, degree: Option<usize>) -> Result<()> {
        Chart::ensure_same(&self.chart, s.chart())?;
        if s.rank() != self.rank() {
            return Err(Error::Dimension(format!(
                "element of rank {} for an algebroid of rank {}",
                s.rank(),
                self.rank()
            )));
        }
        if let Some(d) = degree {
            if s.degree() != d {
                return Err(Error::Dimension(format!("expected degree {d}, got {}", s.degree())));
            }
        }
        Ok(())
    }

    /// Same chart, rank and frame names.
    pub fn same_bundle(&self, other: &LieAlgebroid) -> bool {
        Chart::same(&self.chart, &other.chart) && self.frames == other.frames
    }

    pub fn format_section(&self, s: &Multivector) -> String {
        s.format(&self.frames)
    }

    /// Algebroid with frames permuted and rescaled by signs: new frame
    /// `perm[old]` equals `signs[old] * old frame`.
    pub fn reframe(&self, frames: Vec<String>, perm: &[usize], signs: &[i64]) -> Result<Self> {
        let r = self.rank();
        let zero = Polynomial::zero(&self.chart);
        let mut anchor = vec![vec![zero.clone(); self.chart.dim()]; r];
        let mut structure = vec![vec![vec![zero; r]; r]; r];
        let sgn = |s: i64, p: &Polynomial| if s < 0 { -p } else { p.clone() };
        for a in 0..r {
            anchor[perm[a]] = self.anchor[a].iter().map(|p| sgn(signs[a], p)).collect();
            for b in 0..r {
                for g in 0..r {
                    structure[perm[a]][perm[b]][perm[g]] =
                        sgn(signs[a] * signs[b] * signs[g], &self.structure[a][b][g]);
                }
            }
        }
        LieAlgebroid::new(&self.chart, frames, anchor, structure)
    }

    /// The same structure with renamed frames.
    pub fn with_frames(&self, frames: Vec<String>) -> Result<Self> {
        LieAlgebroid::new(&self.chart, frames, self.anchor.clone(), self.structure.clone())
    }

    /// Equality of anchors and structure functions, ignoring frame names.
    pub fn same_structure(&self, other: &LieAlgebroid) -> bool {
        Chart::same(&self.chart, &other.chart)
            && self.anchor == other.anchor
            && self.structure == other.structure
    }

    /// Re-expresses all coefficients on a larger chart containing this one.
    pub fn to_chart(&self, target: &ChartRef) -> Result<Self> {
        let conv = |p: &Polynomial| p.to_chart(target);
        let n = target.dim();
        let mut anchor = Vec::new();
        for row in &self.anchor {
            let mut out = vector_field::zero(target);
            for (i, p) in row.iter().enumerate() {
                out[target.require(self.chart.name(i))?] = conv(p)?;
            }
            debug_assert_eq!(out.len(), n);
            anchor.push(out);
        }
        let structure = self
            .structure
            .iter()
            .map(|m| {
                m.iter()
                    .map(|v| v.iter().map(conv).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        LieAlgebroid::new(target, self.frames.clone(), anchor, structure)
    }
}

impl fmt::Debug for LieAlgebroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LieAlgebroid over [{}] frames [{}]", self.chart, self.frames.join(", "))?;
        for a in 0..self.rank() {
            writeln!(
                f,
                "  anchor({}) = {}",
                self.frames[a],
                vector_field::format(&self.chart, &self.anchor[a])
            )?;
        }
        for a in 0..self.rank() {
            for b in a + 1..self.rank() {
                let s = self.bracket_frames(a, b);
                if !s.is_zero() {
                    writeln!(
                        f,
                        "  bracket({}, {}) = {}",
                        self.frames[a],
                        self.frames[b],
                        self.format_section(&s)
                    )?;
                }
            }
        }
        Ok(())
    }
}

/// The Leibniz-extended bracket of two sections.
pub fn bracket_sections(l: &LieAlgebroid, x: &Section, y: &Section) -> Result<Section> {
    l.check_section(x, Some(1))?;
    l.check_section(y, Some(1))?;
    let mut out = Multivector::zero(&l.chart, l.rank(), 1);
    for (wa, f) in x.components() {
        for (wb, g) in y.components() {
            let (a, b) = (wa[0], wb[0]);
            let fg = f * g;
            for (k, c) in l.structure[a][b].iter().enumerate() {
                out.add_to(vec![k], &fg * c);
            }
            out.add_to(vec![b], f * &l.act(a, g));
            out.add_to(vec![a], -(g * &l.act(b, f)));
        }
    }
    Ok(out)
}

/// Jacobi identity on all frame triples, then the anchor morphism property
/// on all frame pairs. The first failure in lexicographic order is reported.
pub fn check_algebroid(l: &LieAlgebroid) -> Verdict {
    let r = l.rank();
    let br = |x: &Section, y: &Section| bracket_sections(l, x, y).expect("same algebroid");
    for a in 0..r {
        for b in a + 1..r {
            for c in b + 1..r {
                let (ea, eb, ec) = (l.frame(a), l.frame(b), l.frame(c));
                let j = br(&br(&ea, &eb), &ec)
                    .add(&br(&br(&eb, &ec), &ea))
                    .add(&br(&br(&ec, &ea), &eb));
                if !j.is_zero() {
                    return Verdict::Fail(Witness::new(
                        "jacobi",
                        format!("({}, {}, {})", l.frames[a], l.frames[b], l.frames[c]),
                        l.format_section(&j),
                    ));
                }
            }
        }
    }
    for a in 0..r {
        for b in a + 1..r {
            let lhs = l.anchor_of(&l.bracket_frames(a, b));
            let rhs = vector_field::commutator(&l.anchor[a], &l.anchor[b]);
            let defect = vector_field::sub(&lhs, &rhs);
            if !vector_field::is_zero(&defect) {
                return Verdict::Fail(Witness::new(
                    "anchor",
                    format!("({}, {})", l.frames[a], l.frames[b]),
                    vector_field::format(&l.chart, &defect),
                ));
            }
        }
    }
    Verdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_polynomial;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn tangent_bracket_matches_commutator() {
        let c = Chart::new(&["x"]).unwrap();
        let t = LieAlgebroid::tangent(&c);
        let dx = t.frame(0);
        let x = parse_polynomial("x", &c).unwrap();
        let xdx = Multivector::frame_scaled(x, 1, 0);
        let b = bracket_sections(&t, &dx, &xdx).unwrap();
        assert_eq!(t.format_section(&b), "d/dx");
        assert!(check_algebroid(&t).passed());
    }

    #[test]
    fn abelian_frames_commute() {
        let c = Chart::point();
        let l = LieAlgebroid::abelian(&c, names(&["e1", "e2"])).unwrap();
        assert!(bracket_sections(&l, &l.frame(0), &l.frame(1)).unwrap().is_zero());
    }

    #[test]
    fn non_jacobi_bracket_is_caught() {
        // [e1,e2] = e3, [e2,e3] = e1, [e1,e3] = e1 violates Jacobi.
        let c = Chart::point();
        let q = |v: &[i64]| v.iter().map(|&k| Polynomial::int(&c, k)).collect::<Vec<_>>();
        let l = LieAlgebroid::from_brackets(
            &c,
            names(&["e1", "e2", "e3"]),
            vec![vec![]; 3],
            [(0, 1, q(&[0, 0, 1])), (1, 2, q(&[1, 0, 0])), (0, 2, q(&[1, 0, 0]))],
        )
        .unwrap();
        let v = check_algebroid(&l);
        assert_eq!(v.witness().unwrap().location, "(e1, e2, e3)");
    }

    #[test]
    fn diagonal_bracket_rejected() {
        let c = Chart::point();
        let q = |v: &[i64]| v.iter().map(|&k| Polynomial::int(&c, k)).collect::<Vec<_>>();
        let r = LieAlgebroid::from_brackets(&c, names(&["e1", "e2"]), vec![vec![]; 2], [(0, 0, q(&[0, 1]))]);
        assert!(matches!(r, Err(Error::Schema(_))));
    }
}
