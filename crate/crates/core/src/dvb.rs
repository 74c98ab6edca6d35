//! Decomposed double vector bundles `D = A x_M B x_M C` with core `C`,
//! their duals over `A` and `B`, the pairing between the two duals, the
//! isomorphisms `Z_A`, `Z_B`, and the map `R: T*A* -> T*A`.

use crate::error::{Error, Result};
use crate::exact::chart::is_identifier;
use crate::exact::random::{self, OracleRng};
use crate::exact::{determinant, Chart, ChartRef, Rational};

pub type Vector = Vec<Rational>;

/// A trivialized vector bundle: frame names and the names of the
/// fibre-linear coordinates (the dual frames read as functions).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorBundle {
    frames: Vec<String>,
    coords: Vec<String>,
}

impl VectorBundle {
    pub fn new(frames: Vec<String>, coords: Vec<String>) -> Result<Self> {
        if frames.len() != coords.len() {
            return Err(Error::Dimension("one fibre coordinate per frame is required".into()));
        }
        for c in &coords {
            if !is_identifier(c) {
                return Err(Error::Schema(format!("invalid fibre coordinate name `{c}`")));
            }
        }
        Ok(VectorBundle { frames, coords })
    }

    /// Frames `{prefix}1..` with coordinates `{coord}1..`.
    pub fn numbered(rank: usize, frame: &str, coord: &str) -> Self {
        VectorBundle {
            frames: (1..=rank).map(|i| format!("{frame}{i}")).collect(),
            coords: (1..=rank).map(|i| format!("{coord}{i}")).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.frames.len()
    }

    pub fn frames(&self) -> &[String] {
        &self.frames
    }

    pub fn coords(&self) -> &[String] {
        &self.coords
    }

    /// The dual bundle: its frames are our fibre coordinates and vice versa.
    pub fn dual(&self) -> VectorBundle {
        VectorBundle {
            frames: self.coords.clone(),
            coords: self.frames.clone(),
        }
    }

    /// The tangent bundle of a chart: frames `d/dx`, fibre coordinates `xdot`.
    pub fn tangent(chart: &ChartRef) -> Self {
        VectorBundle {
            frames: chart.names().iter().map(|x| format!("d/d{x}")).collect(),
            coords: chart.names().iter().map(|x| format!("{x}dot")).collect(),
        }
    }

    /// The cotangent bundle of a chart: frames `dx`, fibre coordinates `p_x`.
    pub fn cotangent(chart: &ChartRef) -> Self {
        VectorBundle {
            frames: chart.names().iter().map(|x| format!("d{x}")).collect(),
            coords: chart.names().iter().map(|x| format!("p_{x}")).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leg {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposedDVB {
    chart: ChartRef,
    a: VectorBundle,
    b: VectorBundle,
    c: VectorBundle,
}

impl DecomposedDVB {
    pub fn new(chart: &ChartRef, a: VectorBundle, b: VectorBundle, c: VectorBundle) -> Result<Self> {
        let mut names: Vec<&String> = chart.names().iter().collect();
        names.extend(a.coords.iter().chain(&b.coords).chain(&c.coords));
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::Schema(format!("name `{n}` used twice in the double vector bundle")));
            }
        }
        Ok(DecomposedDVB {
            chart: chart.clone(),
            a,
            b,
            c,
        })
    }

    /// Numbered frames `a1.., b1.., c1..` with coordinates `u1.., v1.., w1..`.
    pub fn with_ranks(chart: &ChartRef, ra: usize, rb: usize, rc: usize) -> Result<Self> {
        DecomposedDVB::new(
            chart,
            VectorBundle::numbered(ra, "a", "u"),
            VectorBundle::numbered(rb, "b", "v"),
            VectorBundle::numbered(rc, "c", "w"),
        )
    }

    pub fn chart(&self) -> &ChartRef {
        &self.chart
    }

    pub fn a(&self) -> &VectorBundle {
        &self.a
    }

    pub fn b(&self) -> &VectorBundle {
        &self.b
    }

    pub fn core(&self) -> &VectorBundle {
        &self.c
    }

    /// The same bundle with the roles of the two sides exchanged.
    pub fn transpose(&self) -> DecomposedDVB {
        DecomposedDVB {
            chart: self.chart.clone(),
            a: self.b.clone(),
            b: self.a.clone(),
            c: self.c.clone(),
        }
    }

    /// `D` dualized over `A`: sides `A` and `C*`, core `B*`.
    pub fn dual_over_a(&self) -> DecomposedDVB {
        DecomposedDVB {
            chart: self.chart.clone(),
            a: self.a.clone(),
            b: self.c.dual(),
            c: self.b.dual(),
        }
    }

    /// `D` dualized over `B`: sides `C*` and `B`, core `A*`.
    pub fn dual_over_b(&self) -> DecomposedDVB {
        DecomposedDVB {
            chart: self.chart.clone(),
            a: self.c.dual(),
            b: self.b.clone(),
            c: self.a.dual(),
        }
    }

    pub fn zero(&self, m: Vector) -> DVBElement {
        DVBElement {
            m,
            a: vec![Rational::zero(); self.a.rank()],
            b: vec![Rational::zero(); self.b.rank()],
            c: vec![Rational::zero(); self.c.rank()],
        }
    }

    /// `0~_a`, the zero of the fibre of `D -> A` over `a`.
    pub fn zero_over_a(&self, m: Vector, a: Vector) -> DVBElement {
        DVBElement { a, ..self.zero(m) }
    }

    /// `0~_b`, the zero of the fibre of `D -> B` over `b`.
    pub fn zero_over_b(&self, m: Vector, b: Vector) -> DVBElement {
        DVBElement { b, ..self.zero(m) }
    }

    /// The core element `c-bar` over `m`.
    pub fn core_element(&self, m: Vector, c: Vector) -> DVBElement {
        DVBElement { c, ..self.zero(m) }
    }

    pub fn random_element(&self, rng: &mut OracleRng, m: &Vector) -> DVBElement {
        let mut v = |n: usize| (0..n).map(|_| random::rational(rng, 5)).collect::<Vector>();
        DVBElement {
            m: m.clone(),
            a: v(self.a.rank()),
            b: v(self.b.rank()),
            c: v(self.c.rank()),
        }
    }
}

/// `(d; a, b; m)` with core component `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DVBElement {
    pub m: Vector,
    pub a: Vector,
    pub b: Vector,
    pub c: Vector,
}

fn add_vec(x: &[Rational], y: &[Rational]) -> Vector {
    x.iter().zip(y).map(|(u, v)| u + v).collect()
}

fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).map(|(u, v)| u * v).sum()
}

fn neg_vec(x: &[Rational]) -> Vector {
    x.iter().map(|u| -u).collect()
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

impl DVBElement {
    /// The outline `(d; a, b; m)` as text.
    pub fn outline(&self) -> String {
        format!(
            "(a = {}, b = {}, c = {}; m = {})",
            fmt_vec(&self.a),
            fmt_vec(&self.b),
            fmt_vec(&self.c),
            fmt_vec(&self.m)
        )
    }
}

/// Addition in `D -> A` (leg `A`, same `a`) or in `D -> B` (leg `B`, same `b`).
pub fn add(d1: &DVBElement, d2: &DVBElement, leg: Leg) -> Result<DVBElement> {
    if d1.m != d2.m {
        return Err(Error::Dimension("elements over different base points".into()));
    }
    match leg {
        Leg::A => {
            if d1.a != d2.a {
                return Err(Error::Dimension("+_A needs equal A-projections".into()));
            }
            Ok(DVBElement {
                m: d1.m.clone(),
                a: d1.a.clone(),
                b: add_vec(&d1.b, &d2.b),
                c: add_vec(&d1.c, &d2.c),
            })
        }
        Leg::B => {
            if d1.b != d2.b {
                return Err(Error::Dimension("+_B needs equal B-projections".into()));
            }
            Ok(DVBElement {
                m: d1.m.clone(),
                a: add_vec(&d1.a, &d2.a),
                b: d1.b.clone(),
                c: add_vec(&d1.c, &d2.c),
            })
        }
    }
}

/// An element of `D⫯A` (leg `A`: side `a`, covector `psi` in `B*`) or of
/// `D⫯B` (leg `B`: side `b`, covector `phi` in `A*`), with `kappa` in `C*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualDVBElement {
    pub leg: Leg,
    pub m: Vector,
    pub side: Vector,
    pub covector: Vector,
    pub kappa: Vector,
}

impl DualDVBElement {
    pub fn over_a(m: Vector, a: Vector, psi: Vector, kappa: Vector) -> Self {
        DualDVBElement {
            leg: Leg::A,
            m,
            side: a,
            covector: psi,
            kappa,
        }
    }

    pub fn over_b(m: Vector, b: Vector, phi: Vector, kappa: Vector) -> Self {
        DualDVBElement {
            leg: Leg::B,
            m,
            side: b,
            covector: phi,
            kappa,
        }
    }

    /// Addition over the side bundle (`A` or `B`).
    pub fn add_over_side(&self, other: &DualDVBElement) -> Result<DualDVBElement> {
        if self.leg != other.leg || self.m != other.m || self.side != other.side {
            return Err(Error::Dimension("addition over the side needs equal side components".into()));
        }
        Ok(DualDVBElement {
            covector: add_vec(&self.covector, &other.covector),
            kappa: add_vec(&self.kappa, &other.kappa),
            ..self.clone()
        })
    }

    /// Addition over `C*`.
    pub fn add_over_core_dual(&self, other: &DualDVBElement) -> Result<DualDVBElement> {
        if self.leg != other.leg || self.m != other.m || self.kappa != other.kappa {
            return Err(Error::Dimension("addition over C* needs equal kappa".into()));
        }
        Ok(DualDVBElement {
            side: add_vec(&self.side, &other.side),
            covector: add_vec(&self.covector, &other.covector),
            ..self.clone()
        })
    }
}

/// `<Phi, d>`: for leg `A`, `<psi, b> + <kappa, c>`; for leg `B`,
/// `<phi, a> + <kappa, c>`.
pub fn evaluate(phi: &DualDVBElement, d: &DVBElement) -> Result<Rational> {
    if phi.m != d.m {
        return Err(Error::Dimension("outline mismatch: base points differ".into()));
    }
    let (side, other) = match phi.leg {
        Leg::A => (&d.a, &d.b),
        Leg::B => (&d.b, &d.a),
    };
    if &phi.side != side {
        return Err(Error::Dimension("outline mismatch: side components differ".into()));
    }
    Ok(&dot(&phi.covector, other) + &dot(&phi.kappa, &d.c))
}

/// `<Phi | Psi> = <Phi, d> - <d, Psi>` for any `d` with outline
/// `(d; a, b; m)`; computed with core component `c`.
pub fn pair_via(phi: &DualDVBElement, psi: &DualDVBElement, c: &[Rational]) -> Result<Rational> {
    if phi.leg != Leg::A || psi.leg != Leg::B {
        return Err(Error::Dimension("pair takes an element over A and one over B".into()));
    }
    if phi.kappa != psi.kappa {
        return Err(Error::Dimension("pair needs equal C* components".into()));
    }
    let d = DVBElement {
        m: phi.m.clone(),
        a: phi.side.clone(),
        b: psi.side.clone(),
        c: c.to_vec(),
    };
    Ok(&evaluate(phi, &d)? - &evaluate(psi, &d)?)
}

pub fn pair(phi: &DualDVBElement, psi: &DualDVBElement) -> Result<Rational> {
    pair_via(phi, psi, &vec![Rational::zero(); phi.kappa.len()])
}

/// An element of `(D⫯B)⫯C*` (when `dual_of` is `B`) or `(D⫯A)⫯C*` (when
/// `dual_of` is `A`): side `kappa` in `C*`, side component in the dual of
/// the core of the inner dual, and core component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreDualElement {
    pub dual_of: Leg,
    pub m: Vector,
    pub kappa: Vector,
    pub side: Vector,
    pub core: Vector,
}

/// Pairing of an element of `(D⫯X)⫯C*` with an element of `D⫯X` over the
/// same `kappa`.
pub fn evaluate_core_dual(z: &CoreDualElement, x: &DualDVBElement) -> Result<Rational> {
    if z.dual_of != x.leg || z.m != x.m || z.kappa != x.kappa {
        return Err(Error::Dimension("outline mismatch over C*".into()));
    }
    Ok(&dot(&z.core, &x.side) + &dot(&z.side, &x.covector))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZMap {
    ZA,
    ZB,
}

/// `Z_A: D⫯A -> (D⫯B)⫯C*` fixes `kappa` and the `B*` core and negates the
/// `A` side; `Z_B: D⫯B -> (D⫯A)⫯C*` fixes `kappa` and `B` and negates the
/// `A*` core. Both satisfy `<Z(X), Y> = <Phi | Psi>`.
pub fn z_iso(x: &DualDVBElement, which: ZMap) -> Result<CoreDualElement> {
    match (which, x.leg) {
        (ZMap::ZA, Leg::A) => Ok(CoreDualElement {
            dual_of: Leg::B,
            m: x.m.clone(),
            kappa: x.kappa.clone(),
            side: neg_vec(&x.side),
            core: x.covector.clone(),
        }),
        (ZMap::ZB, Leg::B) => Ok(CoreDualElement {
            dual_of: Leg::A,
            m: x.m.clone(),
            kappa: x.kappa.clone(),
            side: x.side.clone(),
            core: neg_vec(&x.covector),
        }),
        _ => Err(Error::Dimension("Z_A acts on D⫯A and Z_B on D⫯B".into())),
    }
}

/// Matrix of the pairing between the fibres of `D⫯A` and `D⫯B` over a
/// fixed `kappa`, in the bases `(a-units, psi-units)` and `(b-units, phi-units)`.
pub fn fibre_pairing_matrix(dvb: &DecomposedDVB, m: &Vector, kappa: &Vector) -> Result<Vec<Vector>> {
    let (ra, rb) = (dvb.a.rank(), dvb.b.rank());
    let unit = |n: usize, i: Option<usize>| {
        let mut v = vec![Rational::zero(); n];
        if let Some(i) = i {
            v[i] = Rational::one();
        }
        v
    };
    let lefts: Vec<DualDVBElement> = (0..ra)
        .map(|i| DualDVBElement::over_a(m.clone(), unit(ra, Some(i)), unit(rb, None), kappa.clone()))
        .chain((0..rb).map(|j| DualDVBElement::over_a(m.clone(), unit(ra, None), unit(rb, Some(j)), kappa.clone())))
        .collect();
    let rights: Vec<DualDVBElement> = (0..rb)
        .map(|i| DualDVBElement::over_b(m.clone(), unit(rb, Some(i)), unit(ra, None), kappa.clone()))
        .chain((0..ra).map(|j| DualDVBElement::over_b(m.clone(), unit(rb, None), unit(ra, Some(j)), kappa.clone())))
        .collect();
    let mut rows = Vec::new();
    for l in &lefts {
        let mut row = Vec::new();
        for r in &rights {
            // The pairing is bilinear for the C* additions, whose zero is
            // (0, 0, kappa); basis elements are measured from that zero.
            row.push(pair(l, r)?);
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn is_nondegenerate(dvb: &DecomposedDVB, m: &Vector, kappa: &Vector) -> Result<bool> {
    Ok(!determinant(&fibre_pairing_matrix(dvb, m, kappa)?).is_zero())
}

/// `(T*A; A, A*; M)` with core `T*M`; elements have outline `(x; a, phi; p)`.
pub fn cotangent_dvb(chart: &ChartRef, a: &VectorBundle) -> Result<DecomposedDVB> {
    DecomposedDVB::new(chart, a.clone(), a.dual(), VectorBundle::cotangent(chart))
}

/// `R: T*A* -> T*A`, `(x; phi, a, p) -> (x; a, phi, -p)` in split form.
pub fn r_map(f: &DVBElement) -> DVBElement {
    DVBElement {
        m: f.m.clone(),
        a: f.b.clone(),
        b: f.a.clone(),
        c: neg_vec(&f.c),
    }
}

/// A tangent vector to the total space of a vector bundle: foot point
/// `(m, point)` and velocity `(dm, dpoint)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentElement {
    pub m: Vector,
    pub point: Vector,
    pub dm: Vector,
    pub dpoint: Vector,
}

/// `<F, v>` for `F` in split form `(x; point, covector, p)` on the
/// cotangent double of a bundle, `v` tangent at `(x, point)`.
pub fn cotangent_pairing(f: &DVBElement, v: &TangentElement) -> Result<Rational> {
    if f.m != v.m || f.a != v.point {
        return Err(Error::Dimension("outline mismatch between covector and tangent vector".into()));
    }
    Ok(&dot(&f.c, &v.dm) + &dot(&f.b, &v.dpoint))
}

/// The tangent pairing `d/dt <phi_t, a_t>` of `X` in `T(A*)` and `xi` in
/// `TA` over the same tangent vector of `M`.
pub fn tangent_pairing(x: &TangentElement, xi: &TangentElement) -> Result<Rational> {
    if x.m != xi.m || x.dm != xi.dm {
        return Err(Error::Dimension("tangent vectors over different base vectors".into()));
    }
    Ok(&dot(&x.dpoint, &xi.point) + &dot(&x.point, &xi.dpoint))
}

/// Defect of `<F, X> + <R(F), xi> = <<X, xi>>`.
pub fn r_identity_defect(f: &DVBElement, x: &TangentElement, xi: &TangentElement) -> Result<Rational> {
    let lhs = &cotangent_pairing(f, x)? + &cotangent_pairing(&r_map(f), xi)?;
    Ok(&lhs - &tangent_pairing(x, xi)?)
}

/// A random decomposed bundle over the point with ranks at most `max_rank`.
pub fn random_dvb(rng: &mut OracleRng, max_rank: usize) -> DecomposedDVB {
    use rand::Rng;
    let mut r = || rng.gen_range(0..=max_rank);
    let (ra, rb, rc) = (r(), r(), r());
    DecomposedDVB::with_ranks(&Chart::point(), ra, rb, rc).expect("numbered names are distinct")
}

pub fn random_vector(rng: &mut OracleRng, n: usize) -> Vector {
    (0..n).map(|_| random::rational(rng, 5)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vector {
        v.iter().map(|&x| Rational::integer(x)).collect()
    }

    #[test]
    fn pairing_example() {
        let phi = DualDVBElement::over_a(vec![], q(&[1, 2]), q(&[3]), q(&[7]));
        let psi = DualDVBElement::over_b(vec![], q(&[5]), q(&[1, 1]), q(&[7]));
        assert_eq!(pair(&phi, &psi).unwrap(), Rational::integer(12));
        assert_eq!(pair_via(&phi, &psi, &q(&[-4])).unwrap(), Rational::integer(12));
        let other = DualDVBElement::over_b(vec![], q(&[5]), q(&[1, 1]), q(&[8]));
        assert!(pair(&phi, &other).is_err());
    }

    #[test]
    fn zero_and_core_evaluations() {
        let dvb = DecomposedDVB::with_ranks(&Chart::point(), 2, 1, 1).unwrap();
        let d = add(&dvb.zero_over_b(vec![], q(&[5])), &dvb.core_element(vec![], q(&[3])), Leg::A).unwrap();
        let zero_dual = DualDVBElement::over_a(vec![], q(&[0, 0]), q(&[0]), q(&[2]));
        assert_eq!(evaluate(&zero_dual, &d).unwrap(), Rational::integer(6));
        let core = DualDVBElement::over_a(vec![], q(&[0, 0]), q(&[4]), q(&[0]));
        assert_eq!(evaluate(&core, &d).unwrap(), Rational::integer(20));
    }

    #[test]
    fn z_maps() {
        let psi = DualDVBElement::over_b(vec![], q(&[2]), q(&[1, -3]), q(&[4]));
        let z = z_iso(&psi, ZMap::ZB).unwrap();
        assert_eq!((z.side.clone(), z.kappa.clone(), z.core.clone()), (q(&[2]), q(&[4]), q(&[-1, 3])));
        let phi = DualDVBElement::over_a(vec![], q(&[0, 0]), q(&[6]), q(&[4]));
        let z = z_iso(&phi, ZMap::ZA).unwrap();
        assert_eq!((z.side.clone(), z.core.clone()), (q(&[0, 0]), q(&[6])));
        assert!(z_iso(&phi, ZMap::ZB).is_err());
    }

    #[test]
    fn cotangent_double_dimensions() {
        let c = Chart::new(&["x", "y"]).unwrap();
        let a = VectorBundle::numbered(3, "e", "u");
        let d = cotangent_dvb(&c, &a).unwrap();
        assert_eq!(d.a().rank() + d.b().rank() + d.core().rank(), 3 + 3 + 2);
        let line = cotangent_dvb(&Chart::point(), &VectorBundle::numbered(1, "e", "u")).unwrap();
        assert_eq!(line.core().rank(), 0);
    }

    #[test]
    fn r_negates_core() {
        let f = DVBElement { m: q(&[1]), a: q(&[2]), b: q(&[3]), c: q(&[4]) };
        let r = r_map(&f);
        assert_eq!((r.a.clone(), r.b.clone(), r.c.clone()), (q(&[3]), q(&[2]), q(&[-4])));
        assert_eq!(r_map(&r), DVBElement { c: q(&[4]), ..f });
    }
}
