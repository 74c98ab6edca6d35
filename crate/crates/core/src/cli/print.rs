//! Printing models back into the model-file format.
//!
//! Printed text re-parses to equal objects. Objects that refer to other
//! structures get auxiliary blocks named after them.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::algebroid::{vector_field, Derivation, LieAlgebroid, PoissonChart};
use crate::cli::model::{ModelFile, Object};
use crate::doublela::DoubleLieAlgebroid;
use crate::dvb::DecomposedDVB;
use crate::exact::parse::{format_exterior, format_linear};
use crate::exact::{Chart, ChartRef, Polynomial, Rational};
use crate::lavb::LAVBundle;
use crate::liealg::{Bialgebra, LieAlgebra, PairedAlgebra};
use crate::matched::MatchedPair;

fn constants(v: &[Rational]) -> Vec<Polynomial> {
    let p = Chart::point();
    v.iter().map(|r| Polynomial::constant(&p, r.clone())).collect()
}

pub fn format_derivation(d: &Derivation, frames: &[String]) -> String {
    let mut parts = vec![format!("base = {}", vector_field::format(d.chart(), d.base()))];
    for (j, f) in frames.iter().enumerate() {
        if !vector_field::is_zero(d.image(j)) {
            parts.push(format!("{f} -> {}", format_linear(d.image(j), frames)));
        }
    }
    format!("derivation{{ {} }}", parts.join("; "))
}

/// Accumulates blocks, reusing structurally equal dependencies.
#[derive(Default)]
pub struct Printer {
    out: String,
    taken: BTreeSet<String>,
    charts: Vec<(ChartRef, String)>,
    algebroids: Vec<(LieAlgebroid, String)>,
    algebras: Vec<(LieAlgebra, String)>,
    dvbs: Vec<(DecomposedDVB, String)>,
    lavbs: Vec<(LAVBundle, String)>,
}

impl Printer {
    pub fn new() -> Self {
        Printer::default()
    }

    /// Reserves the names of a model so auxiliary blocks avoid them.
    pub fn reserve<'a>(&mut self, names: impl IntoIterator<Item = &'a str>) {
        self.taken.extend(names.into_iter().map(str::to_string));
    }

    pub fn finish(self) -> String {
        self.out
    }

    pub fn len(&self) -> usize {
        self.out.len()
    }

    pub fn is_empty(&self) -> bool {
        self.out.is_empty()
    }

    /// Text printed after byte offset `start`, without the separating blank line.
    pub fn since(&self, start: usize) -> String {
        self.out[start..].trim_start_matches('\n').to_string()
    }

    fn fresh(&mut self, base: &str) -> String {
        let mut name = base.to_string();
        let mut k = 2;
        while self.taken.contains(&name) {
            name = format!("{base}{k}");
            k += 1;
        }
        self.taken.insert(name.clone());
        name
    }

    fn header(&mut self, kind: &str, name: &str) {
        if !self.out.is_empty() {
            self.out.push('\n');
        }
        let _ = writeln!(self.out, "[{kind} {name}]");
    }

    fn line(&mut self, key: &str, value: impl AsRef<str>) {
        let value = value.as_ref();
        if value.is_empty() {
            let _ = writeln!(self.out, "{key} =");
        } else {
            let _ = writeln!(self.out, "{key} = {value}");
        }
    }

    pub fn chart(&mut self, c: &ChartRef, hint: &str) -> String {
        if let Some((_, n)) = self.charts.iter().find(|(k, _)| k == c) {
            return n.clone();
        }
        let name = self.fresh(hint);
        self.header("chart", &name);
        self.line("coords", c.names().join(", "));
        self.charts.push((c.clone(), name.clone()));
        name
    }

    pub fn lie_algebra(&mut self, g: &LieAlgebra, hint: &str) -> String {
        if let Some((_, n)) = self.algebras.iter().find(|(k, _)| k == g) {
            return n.clone();
        }
        self.lie_algebra_block(g, hint)
    }

    fn lie_algebra_block(&mut self, g: &LieAlgebra, hint: &str) -> String {
        let name = self.fresh(hint);
        self.header("lie_algebra", &name);
        self.line("basis", g.basis().join(", "));
        let b = g.basis().to_vec();
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let v = constants(g.structure(i, j));
                if !vector_field::is_zero(&v) {
                    self.line(&format!("bracket({}, {})", b[i], b[j]), format_linear(&v, &b));
                }
            }
        }
        self.algebras.push((g.clone(), name.clone()));
        name
    }

    pub fn cobracket(&mut self, bi: &Bialgebra, name: &str) -> String {
        let g = self.lie_algebra(&bi.algebra, &format!("{name}_algebra"));
        let name = self.fresh(name);
        self.header("cobracket", &name);
        self.line("algebra", g);
        let b = bi.algebra.basis().to_vec();
        let p = Chart::point();
        for i in 0..bi.cobracket.dim() {
            let m = bi.cobracket.of(i);
            let terms = (0..b.len())
                .flat_map(|j| (j + 1..b.len()).map(move |k| (j, k)))
                .filter(|&(j, k)| !m[j][k].is_zero())
                .map(|(j, k)| (vec![j, k], Polynomial::constant(&p, m[j][k].clone())))
                .collect();
            let text = format_exterior(&terms, &b);
            if text != "0" {
                self.line(&format!("delta({})", b[i]), text);
            }
        }
        name
    }

    pub fn algebroid(&mut self, l: &LieAlgebroid, hint: &str) -> String {
        if let Some((_, n)) = self.algebroids.iter().find(|(k, _)| k == l) {
            return n.clone();
        }
        self.algebroid_block(l, None, hint)
    }

    fn algebroid_block(&mut self, l: &LieAlgebroid, split: Option<usize>, hint: &str) -> String {
        let chart = self.chart(l.chart(), &format!("{hint}_chart"));
        let name = self.fresh(hint);
        self.header("algebroid", &name);
        self.line("chart", chart);
        self.line("frames", l.frames().join(", "));
        let f = l.frames().to_vec();
        for (a, frame) in f.iter().enumerate() {
            if !vector_field::is_zero(l.anchor(a)) {
                self.line(&format!("anchor({frame})"), vector_field::format(l.chart(), l.anchor(a)));
            }
        }
        for a in 0..f.len() {
            for b in a + 1..f.len() {
                if !vector_field::is_zero(l.structure(a, b)) {
                    self.line(&format!("bracket({}, {})", f[a], f[b]), format_linear(l.structure(a, b), &f));
                }
            }
        }
        if let Some(k) = split {
            self.line("split", k.to_string());
        } else {
            self.algebroids.push((l.clone(), name.clone()));
        }
        name
    }

    pub fn poisson(&mut self, p: &PoissonChart, name: &str) -> String {
        let chart = self.chart(p.chart(), &format!("{name}_chart"));
        let name = self.fresh(name);
        self.header("poisson", &name);
        self.line("chart", chart);
        let c = p.chart();
        for i in 0..c.dim() {
            for j in i + 1..c.dim() {
                let v = p.pi(i, j);
                if !v.is_zero() {
                    self.line(&format!("pi({}, {})", c.name(i), c.name(j)), v.to_string());
                }
            }
        }
        name
    }

    pub fn bialgebroid(&mut self, l: &LieAlgebroid, ls: &LieAlgebroid, name: &str) -> String {
        let a = self.algebroid(l, &format!("{name}_algebroid"));
        let b = self.algebroid(ls, &format!("{name}_dual"));
        let name = self.fresh(name);
        self.header("bialgebroid", &name);
        self.line("algebroid", a);
        self.line("dual", b);
        name
    }

    pub fn dvb(&mut self, d: &DecomposedDVB, hint: &str) -> String {
        if let Some((_, n)) = self.dvbs.iter().find(|(k, _)| k == d) {
            return n.clone();
        }
        self.dvb_block(d, hint)
    }

    fn dvb_block(&mut self, d: &DecomposedDVB, hint: &str) -> String {
        let chart = self.chart(d.chart(), &format!("{hint}_chart"));
        let name = self.fresh(hint);
        self.header("dvb", &name);
        self.line("chart", chart);
        for (key, b) in [("a", d.a()), ("b", d.b()), ("core", d.core())] {
            self.line(&format!("{key}_frames"), b.frames().join(", "));
            self.line(&format!("{key}_coords"), b.coords().join(", "));
        }
        self.dvbs.push((d.clone(), name.clone()));
        name
    }

    /// Prints over `dvb` directly, or over its transpose when only that
    /// one has been printed.
    pub fn lavb(&mut self, v: &LAVBundle, name: &str) -> String {
        let transposed = v.dvb().transpose();
        let (dvb, structure) = match self.dvbs.iter().find(|(k, _)| *k == transposed) {
            Some((_, n)) if !self.dvbs.iter().any(|(k, _)| k == v.dvb()) => (n.clone(), "horizontal"),
            _ => (self.dvb(v.dvb(), &format!("{name}_dvb")), "vertical"),
        };
        let side = self.algebroid(v.side(), &format!("{name}_side"));
        let name = self.fresh(name);
        self.header("lavb", &name);
        self.line("dvb", dvb);
        self.line("structure", structure);
        self.line("side", side);
        let d = v.dvb();
        let (a, b, c) = (d.a(), d.b(), d.core());
        for (k, f) in b.frames().iter().enumerate() {
            let l = &v.linear_anchor()[k];
            if !l.images().iter().all(|r| vector_field::is_zero(r)) || l.base() != v.side().anchor(k) {
                self.line(&format!("lambda({f})"), format_derivation(l, a.coords()));
            }
        }
        for (g, f) in c.frames().iter().enumerate() {
            if !vector_field::is_zero(&v.core_anchor()[g]) {
                self.line(&format!("core_anchor({f})"), format_linear(&v.core_anchor()[g], a.frames()));
            }
        }
        for (k, f) in b.frames().iter().enumerate() {
            let q = &v.core_action()[k];
            if !q.images().iter().all(|r| vector_field::is_zero(r)) || q.base() != v.side().anchor(k) {
                self.line(&format!("core_action({f})"), format_derivation(q, c.frames()));
            }
        }
        let t = v.twist();
        for i in 0..b.rank() {
            for j in i + 1..b.rank() {
                for g in 0..c.rank() {
                    if !vector_field::is_zero(&t[i][j][g]) {
                        let key = format!("twist({}, {}, {})", b.frames()[i], b.frames()[j], c.frames()[g]);
                        self.line(&key, format_linear(&t[i][j][g], a.coords()));
                    }
                }
            }
        }
        self.lavbs.push((v.clone(), name.clone()));
        name
    }

    pub fn matched(&mut self, mp: &MatchedPair, name: &str) -> String {
        let a = self.algebroid(&mp.a, &format!("{name}_a"));
        let b = self.algebroid(&mp.b, &format!("{name}_b"));
        let name = self.fresh(name);
        self.header("matched_pair", &name);
        self.line("a", a);
        self.line("b", b);
        for (k, f) in mp.a.frames().iter().enumerate() {
            self.line(&format!("rho({f})"), format_derivation(&mp.rho[k], mp.b.frames()));
        }
        for (k, f) in mp.b.frames().iter().enumerate() {
            self.line(&format!("sigma({f})"), format_derivation(&mp.sigma[k], mp.a.frames()));
        }
        name
    }

    pub fn double(&mut self, d: &DoubleLieAlgebroid, name: &str) -> String {
        let mut lavb = |v: &LAVBundle, hint: String| match self.lavbs.iter().find(|(k, _)| k == v) {
            Some((_, n)) => n.clone(),
            None => self.lavb(v, &hint),
        };
        let v = lavb(d.vertical(), format!("{name}_vertical"));
        let h = lavb(d.horizontal(), format!("{name}_horizontal"));
        let name = self.fresh(name);
        self.header("double", &name);
        self.line("vertical", v);
        self.line("horizontal", h);
        name
    }

    pub fn manin(&mut self, p: &PairedAlgebra, name: &str) -> String {
        let g = self.lie_algebra(&p.algebra, &format!("{name}_algebra"));
        let name = self.fresh(name);
        self.header("manin", &name);
        self.line("algebra", g);
        let b = p.algebra.basis().to_vec();
        for i in 0..b.len() {
            for j in i..b.len() {
                if !p.pairing[i][j].is_zero() {
                    self.line(&format!("pair({}, {})", b[i], b[j]), p.pairing[i][j].to_string());
                }
            }
        }
        let vectors = |vs: &[Vec<Rational>]| -> String {
            vs.iter().map(|v| format_linear(&constants(v), &b)).collect::<Vec<_>>().join("; ")
        };
        let (first, second) = (vectors(&p.first), vectors(&p.second));
        self.line("first", first);
        self.line("second", second);
        name
    }

    /// Prints `o` as a block named exactly `name`, which must be free.
    pub fn object(&mut self, o: &Object, name: &str) -> String {
        match o {
            Object::Chart(c) => {
                let n = self.fresh(name);
                self.header("chart", &n);
                self.line("coords", c.names().join(", "));
                self.charts.push((c.clone(), n.clone()));
                n
            }
            Object::LieAlgebra(g) => self.lie_algebra_block(g, name),
            Object::Cobracket(b) => self.cobracket(b, name),
            Object::Algebroid { algebroid, split } => self.algebroid_block(algebroid, *split, name),
            Object::Poisson(p) => self.poisson(p, name),
            Object::Bialgebroid(l, ls) => self.bialgebroid(l, ls, name),
            Object::Dvb(d) => self.dvb_block(d, name),
            Object::Lavb(v) => self.lavb(v, name),
            Object::Matched(m) => self.matched(m, name),
            Object::Double(d) => self.double(d, name),
            Object::Manin(p) => self.manin(p, name),
        }
    }
}

/// Prints a whole model. Top-level names are kept.
pub fn print_model(model: &ModelFile) -> String {
    let mut p = Printer::new();
    p.reserve(model.items.iter().map(|(n, _)| n.as_str()));
    for (name, o) in &model.items {
        p.taken.remove(name);
        p.object(o, name);
    }
    p.finish()
}

/// Prints one object, with its dependencies, as a block named `name`.
pub fn print_object(o: &Object, name: &str) -> String {
    let mut p = Printer::new();
    p.object(o, name);
    p.finish()
}
