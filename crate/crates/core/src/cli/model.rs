//! The model-file format: named blocks of `key = value` entries.
//!
//! ```text
//! # comment
//! [chart M]
//! coords = x, y
//!
//! [algebroid L]
//! chart = M
//! frames = e1, e2
//! anchor(e1) = d/dx
//! bracket(e1, e2) = x * e2
//! ```
//!
//! Blocks may only refer to blocks defined above them. Every block is
//! validated as soon as it is read.

use std::collections::BTreeMap;

use crate::algebroid::{cotangent_algebroid, vector_field, Derivation, LieAlgebroid, PoissonChart};
use crate::doublela::{build_cotangent_double, vacant_from_matched_unchecked, DoubleLieAlgebroid};
use crate::dvb::{DecomposedDVB, VectorBundle};
use crate::error::{Error, Result};
use crate::exact::parse::parse_exterior;
use crate::exact::{parse_linear, parse_polynomial, Chart, ChartRef, Polynomial, Rational};
use crate::lavb::LAVBundle;
use crate::liealg::{dual_bracket, Bialgebra, Cobracket, LieAlgebra, PairedAlgebra};
use crate::matched::MatchedPair;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub key: String,
    pub args: Vec<String>,
    pub value: String,
    pub line: usize,
    pub value_col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub kind: String,
    pub name: String,
    pub line: usize,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Chart(ChartRef),
    LieAlgebra(LieAlgebra),
    Cobracket(Bialgebra),
    Algebroid { algebroid: LieAlgebroid, split: Option<usize> },
    Poisson(PoissonChart),
    Bialgebroid(LieAlgebroid, LieAlgebroid),
    Dvb(DecomposedDVB),
    Lavb(LAVBundle),
    Matched(MatchedPair),
    Double(DoubleLieAlgebroid),
    Manin(PairedAlgebra),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Chart(_) => "chart",
            Object::LieAlgebra(_) => "lie_algebra",
            Object::Cobracket(_) => "cobracket",
            Object::Algebroid { .. } => "algebroid",
            Object::Poisson(_) => "poisson",
            Object::Bialgebroid(..) => "bialgebroid",
            Object::Dvb(_) => "dvb",
            Object::Lavb(_) => "lavb",
            Object::Matched(_) => "matched_pair",
            Object::Double(_) => "double",
            Object::Manin(_) => "manin",
        }
    }
}

/// A parsed and validated model: objects in file order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ModelFile {
    pub items: Vec<(String, Object)>,
}

impl ModelFile {
    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.items.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    pub fn of_kind<'a>(&'a self, kind: &'a str) -> impl Iterator<Item = (&'a str, &'a Object)> + 'a {
        self.items
            .iter()
            .filter(move |(_, o)| o.kind() == kind)
            .map(|(n, o)| (n.as_str(), o))
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits the text into blocks and entries without interpreting them.
pub fn parse_blocks(text: &str) -> Result<Vec<Block>> {
    let mut blocks: Vec<Block> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = content.chars().take_while(|c| c.is_whitespace()).count();
        if trimmed.starts_with('[') {
            if !trimmed.ends_with(']') {
                return Err(syntax(line, indent + trimmed.chars().count() + 1, "expected `]`"));
            }
            let inner = &trimmed[1..trimmed.len() - 1];
            let parts: Vec<&str> = inner.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(syntax(line, indent + 2, "block header must be `[kind name]`"));
            }
            if blocks.iter().any(|b| b.name == parts[1]) {
                return Err(syntax(line, indent + 2, format!("duplicate block name `{}`", parts[1])));
            }
            blocks.push(Block {
                kind: parts[0].to_string(),
                name: parts[1].to_string(),
                line,
                entries: Vec::new(),
            });
            continue;
        }
        let Some(block) = blocks.last_mut() else {
            return Err(syntax(line, indent + 1, "entry outside of a block"));
        };
        let chars: Vec<char> = content.chars().collect();
        let Some(eq) = chars.iter().position(|&c| c == '=') else {
            return Err(syntax(line, indent + 1, "expected `key = value`"));
        };
        let lhs: String = chars[..eq].iter().collect();
        let rhs: String = chars[eq + 1..].iter().collect();
        let lead = rhs.chars().take_while(|c| c.is_whitespace()).count();
        let value_col = eq + 2 + lead;
        let lhs = lhs.trim();
        let (key, args) = match lhs.find('(') {
            None => (lhs.to_string(), Vec::new()),
            Some(p) => {
                if !lhs.ends_with(')') {
                    return Err(syntax(line, indent + lhs.chars().count() + 1, "expected `)`"));
                }
                let inner = &lhs[p + 1..lhs.len() - 1];
                let args = inner.split(',').map(|s| s.trim().to_string()).collect();
                (lhs[..p].trim().to_string(), args)
            }
        };
        if key.is_empty() {
            return Err(syntax(line, indent + 1, "missing key"));
        }
        let entry = Entry {
            key,
            args,
            value: rhs.trim().to_string(),
            line,
            value_col,
        };
        if block
            .entries
            .iter()
            .any(|e| e.key == entry.key && e.args == entry.args)
        {
            return Err(syntax(line, indent + 1, format!("duplicate entry `{lhs}`")));
        }
        block.entries.push(entry);
    }
    Ok(blocks)
}

/// Parses and validates a model file.
pub fn parse_model(text: &str) -> Result<ModelFile> {
    let blocks = parse_blocks(text)?;
    let mut model = ModelFile::default();
    for block in &blocks {
        let object = Resolver { model: &model, block }.resolve()?;
        model.items.push((block.name.clone(), object));
    }
    Ok(model)
}

struct Resolver<'a> {
    model: &'a ModelFile,
    block: &'a Block,
}

/// Moves an error from a value into file coordinates.
fn locate(e: Error, entry: &Entry) -> Error {
    match e {
        Error::Parse { column, message, .. } => Error::Parse {
            line: entry.line,
            column: entry.value_col + column.max(1) - 1,
            message,
        },
        other => Error::Parse {
            line: entry.line,
            column: entry.value_col,
            message: other.to_string(),
        },
    }
}

fn list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

impl Resolver<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        syntax(self.block.line, 2, message)
    }

    fn at(&self, entry: &Entry, message: impl Into<String>) -> Error {
        syntax(entry.line, entry.value_col, message)
    }

    fn entry(&self, key: &str) -> Option<&Entry> {
        self.block.entries.iter().find(|e| e.key == key && e.args.is_empty())
    }

    fn required(&self, key: &str) -> Result<&Entry> {
        self.entry(key)
            .ok_or_else(|| self.err(format!("[{}] block needs `{key}`", self.block.kind)))
    }

    fn indexed(&self, key: &str) -> impl Iterator<Item = &Entry> {
        let key = key.to_string();
        self.block.entries.iter().filter(move |e| e.key == key && !e.args.is_empty())
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        for e in &self.block.entries {
            if !allowed.contains(&e.key.as_str()) {
                return Err(syntax(e.line, 1, format!("unknown key `{}` in [{}] block", e.key, self.block.kind)));
            }
        }
        Ok(())
    }

    fn reference<T>(&self, entry: &Entry, pick: impl Fn(&Object) -> Option<T>, what: &str) -> Result<T> {
        let name = entry.value.trim();
        match self.model.get(name) {
            None => Err(Error::Parse {
                line: entry.line,
                column: entry.value_col,
                message: format!("unresolved reference `{name}`"),
            }),
            Some(o) => pick(o).ok_or_else(|| self.at(entry, format!("`{name}` is not a {what}"))),
        }
    }

    fn chart_ref(&self, entry: &Entry) -> Result<ChartRef> {
        self.reference(entry, |o| match o {
            Object::Chart(c) => Some(c.clone()),
            _ => None,
        }, "chart")
    }

    fn algebroid_ref(&self, entry: &Entry) -> Result<LieAlgebroid> {
        self.reference(entry, |o| match o {
            Object::Algebroid { algebroid, .. } => Some(algebroid.clone()),
            _ => None,
        }, "algebroid")
    }

    fn bialgebra_ref(&self, entry: &Entry) -> Result<Bialgebra> {
        self.reference(entry, |o| match o {
            Object::Cobracket(b) => Some(b.clone()),
            _ => None,
        }, "cobracket")
    }

    fn one_arg(&self, entry: &Entry, names: &[String]) -> Result<usize> {
        if entry.args.len() != 1 {
            return Err(syntax(entry.line, 1, format!("`{}` takes one argument", entry.key)));
        }
        self.index_of(entry, &entry.args[0], names)
    }

    fn index_of(&self, entry: &Entry, name: &str, names: &[String]) -> Result<usize> {
        names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| syntax(entry.line, 1, format!("unknown name `{name}` in `{}`", entry.key)))
    }

    fn pair_args(&self, entry: &Entry, names: &[String]) -> Result<(usize, usize)> {
        if entry.args.len() != 2 {
            return Err(syntax(entry.line, 1, format!("`{}` takes two arguments", entry.key)));
        }
        Ok((self.index_of(entry, &entry.args[0], names)?, self.index_of(entry, &entry.args[1], names)?))
    }

    fn resolve(&self) -> Result<Object> {
        match self.block.kind.as_str() {
            "chart" => self.chart(),
            "lie_algebra" => self.lie_algebra(),
            "cobracket" => self.cobracket(),
            "algebroid" => self.algebroid(),
            "poisson" => self.poisson(),
            "bialgebroid" => self.bialgebroid(),
            "dvb" => self.dvb(),
            "lavb" => self.lavb(),
            "matched_pair" => self.matched(),
            "double" => self.double(),
            "manin" => self.manin(),
            other => Err(syntax(self.block.line, 2, format!("unknown block kind `{other}`"))),
        }
    }

    fn chart(&self) -> Result<Object> {
        self.check_keys(&["coords"])?;
        let e = self.required("coords")?;
        Ok(Object::Chart(Chart::new(&list(&e.value)).map_err(|err| locate(err, e))?))
    }

    /// Brackets from `bracket(a, b) = ...` entries, normalized to `a < b`.
    fn brackets<T: Clone + PartialEq>(
        &self,
        names: &[String],
        parse: impl Fn(&Entry) -> Result<Vec<T>>,
        is_zero: impl Fn(&[T]) -> bool,
        neg: impl Fn(&[T]) -> Vec<T>,
    ) -> Result<Vec<(usize, usize, Vec<T>)>> {
        let mut seen: BTreeMap<(usize, usize), Vec<T>> = BTreeMap::new();
        for e in self.indexed("bracket") {
            let (i, j) = self.pair_args(e, names)?;
            let v = parse(e).map_err(|err| locate(err, e))?;
            if i == j {
                if !is_zero(&v) {
                    return Err(self.at(e, format!("schema violation: bracket({0}, {0}) must be 0 by antisymmetry", names[i])));
                }
                continue;
            }
            let (key, v) = if i < j { ((i, j), v) } else { ((j, i), neg(&v)) };
            match seen.get(&key) {
                Some(prev) if *prev != v => {
                    return Err(self.at(e, "schema violation: inconsistent brackets for one pair"));
                }
                Some(_) => {}
                None => {
                    seen.insert(key, v);
                }
            }
        }
        Ok(seen.into_iter().map(|((i, j), v)| (i, j, v)).collect())
    }

    fn lie_algebra(&self) -> Result<Object> {
        self.check_keys(&["basis", "bracket"])?;
        let basis = list(&self.required("basis")?.value);
        let point = Chart::point();
        let parse = |e: &Entry| -> Result<Vec<Rational>> {
            let v = parse_linear(&e.value, &point, &basis)?;
            Ok(v.iter().map(|p| p.as_constant().expect("point chart")).collect())
        };
        let br = self.brackets(&basis, parse, |v| v.iter().all(Rational::is_zero), |v| v.iter().map(|x| -x).collect())?;
        let g = LieAlgebra::from_brackets(basis, br).map_err(|e| self.err(e.to_string()))?;
        Ok(Object::LieAlgebra(g))
    }

    fn cobracket(&self) -> Result<Object> {
        self.check_keys(&["algebra", "delta"])?;
        let e = self.required("algebra")?;
        let g = self.reference(e, |o| match o {
            Object::LieAlgebra(g) => Some(g.clone()),
            _ => None,
        }, "lie_algebra")?;
        let basis = g.basis().to_vec();
        let point = Chart::point();
        let mut entries = Vec::new();
        for e in self.indexed("delta") {
            let i = self.one_arg(e, &basis)?;
            let w = parse_exterior(&e.value, &point, &basis, 2).map_err(|err| locate(err, e))?;
            for (idx, c) in w {
                entries.push((i, idx[0], idx[1], c.as_constant().expect("point chart")));
            }
        }
        let d = Cobracket::from_entries(basis.len(), entries).map_err(|e| self.err(e.to_string()))?;
        Ok(Object::Cobracket(Bialgebra::new(g, d)?))
    }

    fn vector_field(&self, e: &Entry, chart: &ChartRef) -> Result<Vec<Polynomial>> {
        parse_linear(&e.value, chart, &vector_field::coordinate_names(chart)).map_err(|err| locate(err, e))
    }

    fn algebroid(&self) -> Result<Object> {
        self.check_keys(&["chart", "frames", "anchor", "bracket", "tangent", "cotangent", "lie_algebra", "dual_of", "split"])?;
        let split = match self.entry("split") {
            None => None,
            Some(e) => Some(e.value.parse::<usize>().map_err(|_| self.at(e, "split must be a frame count"))?),
        };
        let algebroid = if let Some(e) = self.entry("tangent") {
            LieAlgebroid::tangent(&self.chart_ref(e)?)
        } else if let Some(e) = self.entry("cotangent") {
            let p = self.reference(e, |o| match o {
                Object::Poisson(p) => Some(p.clone()),
                _ => None,
            }, "poisson")?;
            cotangent_algebroid(&p).map_err(|err| locate(err, e))?
        } else if let Some(e) = self.entry("lie_algebra") {
            let g = self.reference(e, |o| match o {
                Object::LieAlgebra(g) => Some(g.clone()),
                _ => None,
            }, "lie_algebra")?;
            g.to_algebroid()
        } else if let Some(e) = self.entry("dual_of") {
            let b = self.bialgebra_ref(e)?;
            dual_bracket(&b).map_err(|err| locate(err, e))?.to_algebroid()
        } else {
            let chart = self.chart_ref(self.required("chart")?)?;
            let frames = list(&self.required("frames")?.value);
            let mut anchor = vec![vector_field::zero(&chart); frames.len()];
            for e in self.indexed("anchor") {
                let a = self.one_arg(e, &frames)?;
                anchor[a] = self.vector_field(e, &chart)?;
            }
            let br = self.brackets(
                &frames,
                |e| parse_linear(&e.value, &chart, &frames),
                |v| v.iter().all(Polynomial::is_zero),
                |v| v.iter().map(|p| -p).collect(),
            )?;
            LieAlgebroid::from_brackets(&chart, frames, anchor, br).map_err(|e| self.err(e.to_string()))?
        };
        if let Some(k) = split {
            if k > algebroid.rank() {
                return Err(self.at(self.entry("split").unwrap(), "split exceeds the rank"));
            }
        }
        Ok(Object::Algebroid { algebroid, split })
    }

    fn poisson(&self) -> Result<Object> {
        self.check_keys(&["chart", "pi"])?;
        let chart = self.chart_ref(self.required("chart")?)?;
        let coords = chart.names().to_vec();
        let mut entries = Vec::new();
        for e in self.indexed("pi") {
            let (i, j) = self.pair_args(e, &coords)?;
            let p = parse_polynomial(&e.value, &chart).map_err(|err| locate(err, e))?;
            if i == j {
                if !p.is_zero() {
                    return Err(self.at(e, "schema violation: pi(x, x) must be 0 by antisymmetry"));
                }
                continue;
            }
            entries.push((i, j, p));
        }
        Ok(Object::Poisson(PoissonChart::new(&chart, entries).map_err(|e| self.err(e.to_string()))?))
    }

    fn bialgebroid(&self) -> Result<Object> {
        self.check_keys(&["algebroid", "dual"])?;
        let l = self.algebroid_ref(self.required("algebroid")?)?;
        let e = self.required("dual")?;
        let ls = self.algebroid_ref(e)?;
        if !Chart::same(l.chart(), ls.chart()) || l.rank() != ls.rank() {
            return Err(self.at(e, "the dual must have the same chart and rank"));
        }
        Ok(Object::Bialgebroid(l, ls))
    }

    fn bundle(&self, prefix: &str) -> Result<VectorBundle> {
        let frames = self.required(&format!("{prefix}_frames"))?;
        let coords = self.required(&format!("{prefix}_coords"))?;
        VectorBundle::new(list(&frames.value), list(&coords.value)).map_err(|e| locate(e, coords))
    }

    /// `{A: 1, B: 2, C: 1}`
    fn ranks(&self, e: &Entry) -> Result<(usize, usize, usize)> {
        let bad = || self.at(e, "expected `{A: rank, B: rank, C: rank}`");
        let inner = e.value.trim().strip_prefix('{').and_then(|s| s.strip_suffix('}')).ok_or_else(bad)?;
        let mut r = [None; 3];
        for part in inner.split(',') {
            let (k, v) = part.split_once(':').ok_or_else(bad)?;
            let slot = match k.trim() {
                "A" => 0,
                "B" => 1,
                "C" => 2,
                _ => return Err(bad()),
            };
            r[slot] = Some(v.trim().parse::<usize>().map_err(|_| bad())?);
        }
        match r {
            [Some(a), Some(b), Some(c)] => Ok((a, b, c)),
            _ => Err(bad()),
        }
    }

    fn dvb(&self) -> Result<Object> {
        self.check_keys(&["chart", "ranks", "a_frames", "a_coords", "b_frames", "b_coords", "core_frames", "core_coords"])?;
        let chart = self.chart_ref(self.required("chart")?)?;
        if let Some(e) = self.entry("ranks") {
            let (ra, rb, rc) = self.ranks(e)?;
            let d = DecomposedDVB::with_ranks(&chart, ra, rb, rc).map_err(|err| locate(err, e))?;
            return Ok(Object::Dvb(d));
        }
        let d = DecomposedDVB::new(&chart, self.bundle("a")?, self.bundle("b")?, self.bundle("core")?)
            .map_err(|e| self.err(e.to_string()))?;
        Ok(Object::Dvb(d))
    }

    /// `derivation{ base = <vector field>; t1 -> <linear>; ... }`; the base
    /// defaults to `default_base` and unlisted frames map to zero.
    fn derivation(&self, e: &Entry, chart: &ChartRef, frames: &[String], default_base: &[Polynomial]) -> Result<Derivation> {
        let v = e.value.trim();
        let Some(inner) = v.strip_prefix("derivation{").and_then(|s| s.strip_suffix('}')) else {
            return Err(self.at(e, "expected `derivation{ ... }`"));
        };
        let offset = e.value_col + "derivation{".len();
        let r = frames.len();
        let mut base = default_base.to_vec();
        let mut images = vec![vec![Polynomial::zero(chart); r]; r];
        let mut pos = 0;
        for part in inner.split(';') {
            let start = offset + pos + part.chars().take_while(|c| c.is_whitespace()).count();
            pos += part.chars().count() + 1;
            let p = part.trim();
            if p.is_empty() {
                continue;
            }
            let sub = Entry {
                key: e.key.clone(),
                args: e.args.clone(),
                value: String::new(),
                line: e.line,
                value_col: start,
            };
            if let Some(rest) = p.strip_prefix("base") {
                let rest = rest.trim_start();
                let Some(vf) = rest.strip_prefix('=') else {
                    return Err(self.at(&sub, "expected `base = <vector field>`"));
                };
                let col = start + (p.chars().count() - vf.chars().count());
                let lead = vf.chars().take_while(|c| c.is_whitespace()).count();
                let vsub = Entry { value_col: col + lead, ..sub.clone() };
                base = parse_linear(vf.trim(), chart, &vector_field::coordinate_names(chart))
                    .map_err(|err| locate(err, &vsub))?;
            } else if let Some((lhs, rhs)) = p.split_once("->") {
                let k = frames
                    .iter()
                    .position(|f| f == lhs.trim())
                    .ok_or_else(|| self.at(&sub, format!("unknown frame `{}`", lhs.trim())))?;
                let col = start + lhs.chars().count() + 2;
                let lead = rhs.chars().take_while(|c| c.is_whitespace()).count();
                let vsub = Entry { value_col: col + lead, ..sub.clone() };
                images[k] = parse_linear(rhs.trim(), chart, frames).map_err(|err| locate(err, &vsub))?;
            } else {
                return Err(self.at(&sub, "expected `base = ...` or `frame -> ...`"));
            }
        }
        Derivation::new(chart, base, images).map_err(|err| locate(err, e))
    }

    fn lavb(&self) -> Result<Object> {
        self.check_keys(&["dvb", "structure", "side", "lambda", "core_anchor", "core_action", "twist"])?;
        let e = self.required("dvb")?;
        let mut dvb = self.reference(e, |o| match o {
            Object::Dvb(d) => Some(d.clone()),
            _ => None,
        }, "dvb")?;
        if let Some(e) = self.entry("structure") {
            match e.value.as_str() {
                "vertical" => {}
                "horizontal" => dvb = dvb.transpose(),
                _ => return Err(self.at(e, "structure must be `vertical` or `horizontal`")),
            }
        }
        let e = self.required("side")?;
        let side = self.algebroid_ref(e)?;
        if side.frames() != dvb.b().frames() || !Chart::same(side.chart(), dvb.chart()) {
            return Err(self.at(e, "the side algebroid must live on the base chart with the frames of the side bundle"));
        }
        let chart = dvb.chart().clone();
        let (a, b, c) = (dvb.a().clone(), dvb.b().clone(), dvb.core().clone());
        let mut lambda: Vec<Derivation> = (0..b.rank())
            .map(|k| Derivation::new(&chart, side.anchor(k).to_vec(), vec![vec![Polynomial::zero(&chart); a.rank()]; a.rank()]))
            .collect::<Result<_>>()?;
        for e in self.indexed("lambda") {
            let k = self.one_arg(e, b.frames())?;
            lambda[k] = self.derivation(e, &chart, a.coords(), side.anchor(k))?;
        }
        let mut action: Vec<Derivation> = (0..b.rank())
            .map(|k| Derivation::new(&chart, side.anchor(k).to_vec(), vec![vec![Polynomial::zero(&chart); c.rank()]; c.rank()]))
            .collect::<Result<_>>()?;
        for e in self.indexed("core_action") {
            let k = self.one_arg(e, b.frames())?;
            action[k] = self.derivation(e, &chart, c.frames(), side.anchor(k))?;
        }
        let mut core_anchor = vec![vec![Polynomial::zero(&chart); a.rank()]; c.rank()];
        for e in self.indexed("core_anchor") {
            let g = self.one_arg(e, c.frames())?;
            core_anchor[g] = parse_linear(&e.value, &chart, a.frames()).map_err(|err| locate(err, e))?;
        }
        let mut twist = LAVBundle::zero_twist(&chart, b.rank(), c.rank(), a.rank());
        let mut given = BTreeMap::new();
        for e in self.indexed("twist") {
            if e.args.len() != 3 {
                return Err(syntax(e.line, 1, "`twist` takes (side frame, side frame, core frame)"));
            }
            let i = self.index_of(e, &e.args[0], b.frames())?;
            let j = self.index_of(e, &e.args[1], b.frames())?;
            let g = self.index_of(e, &e.args[2], c.frames())?;
            let v = parse_linear(&e.value, &chart, a.coords()).map_err(|err| locate(err, e))?;
            if i == j {
                if v.iter().any(|p| !p.is_zero()) {
                    return Err(self.at(e, "schema violation: twist of a frame with itself must be 0"));
                }
                continue;
            }
            if given.insert((i.min(j), i.max(j), g), ()).is_some() {
                return Err(self.at(e, "schema violation: twist given twice for one pair"));
            }
            for (al, p) in v.into_iter().enumerate() {
                twist[j][i][g][al] = -&p;
                twist[i][j][g][al] = p;
            }
        }
        let v = LAVBundle::new(dvb, side, lambda, core_anchor, action, twist).map_err(|e| self.err(e.to_string()))?;
        Ok(Object::Lavb(v))
    }

    fn matched(&self) -> Result<Object> {
        self.check_keys(&["a", "b", "rho", "sigma", "coadjoint"])?;
        if let Some(e) = self.entry("coadjoint") {
            let b = self.bialgebra_ref(e)?;
            return Ok(Object::Matched(MatchedPair::coadjoint(&b).map_err(|err| locate(err, e))?));
        }
        let a = self.algebroid_ref(self.required("a")?)?;
        let e = self.required("b")?;
        let b = self.algebroid_ref(e)?;
        if !Chart::same(a.chart(), b.chart()) {
            return Err(self.at(e, "both algebroids must share one chart"));
        }
        let mp = MatchedPair::trivial(a, b)?;
        let chart = mp.chart().clone();
        let mut rho = mp.rho.clone();
        for e in self.indexed("rho") {
            let k = self.one_arg(e, mp.a.frames())?;
            rho[k] = self.derivation(e, &chart, mp.b.frames(), mp.a.anchor(k))?;
        }
        let mut sigma = mp.sigma.clone();
        for e in self.indexed("sigma") {
            let k = self.one_arg(e, mp.b.frames())?;
            sigma[k] = self.derivation(e, &chart, mp.a.frames(), mp.b.anchor(k))?;
        }
        Ok(Object::Matched(MatchedPair::new(mp.a, mp.b, rho, sigma)?))
    }

    fn double(&self) -> Result<Object> {
        self.check_keys(&["vertical", "horizontal", "tangent_square", "cotangent", "vacant"])?;
        if let Some(e) = self.entry("tangent_square") {
            let chart = self.chart_ref(e)?;
            return Ok(Object::Double(DoubleLieAlgebroid::tangent_square_default(&chart).map_err(|err| locate(err, e))?));
        }
        if let Some(e) = self.entry("cotangent") {
            let (l, ls) = self.reference(e, |o| match o {
                Object::Bialgebroid(l, ls) => Some((l.clone(), ls.clone())),
                _ => None,
            }, "bialgebroid")?;
            return Ok(Object::Double(build_cotangent_double(&l, &ls).map_err(|err| locate(err, e))?));
        }
        if let Some(e) = self.entry("vacant") {
            let mp = self.reference(e, |o| match o {
                Object::Matched(m) => Some(m.clone()),
                _ => None,
            }, "matched_pair")?;
            return Ok(Object::Double(vacant_from_matched_unchecked(&mp).map_err(|err| locate(err, e))?));
        }
        let lavb = |key: &str| -> Result<LAVBundle> {
            let e = self.required(key)?;
            self.reference(e, |o| match o {
                Object::Lavb(v) => Some(v.clone()),
                _ => None,
            }, "lavb")
        };
        let e = self.required("horizontal")?;
        let d = DoubleLieAlgebroid::new(lavb("vertical")?, lavb("horizontal")?).map_err(|err| locate(err, e))?;
        Ok(Object::Double(d))
    }

    fn manin(&self) -> Result<Object> {
        self.check_keys(&["algebra", "pair", "first", "second"])?;
        let e = self.required("algebra")?;
        let g = self.reference(e, |o| match o {
            Object::LieAlgebra(g) => Some(g.clone()),
            _ => None,
        }, "lie_algebra")?;
        let basis = g.basis().to_vec();
        let n = basis.len();
        let point = Chart::point();
        let mut pairing = vec![vec![Rational::zero(); n]; n];
        for e in self.indexed("pair") {
            let (i, j) = self.pair_args(e, &basis)?;
            let p = parse_polynomial(&e.value, &point).map_err(|err| locate(err, e))?;
            let v = p.as_constant().expect("point chart");
            pairing[i][j] = v.clone();
            pairing[j][i] = v;
        }
        let vectors = |key: &str| -> Result<Vec<Vec<Rational>>> {
            let e = self.required(key)?;
            let mut out = Vec::new();
            let mut pos = 0;
            for part in e.value.split(';') {
                let lead = part.chars().take_while(|c| c.is_whitespace()).count();
                let sub = Entry { value_col: e.value_col + pos + lead, ..e.clone() };
                pos += part.chars().count() + 1;
                if part.trim().is_empty() {
                    continue;
                }
                let v = parse_linear(part.trim(), &point, &basis).map_err(|err| locate(err, &sub))?;
                out.push(v.iter().map(|p| p.as_constant().expect("point chart")).collect());
            }
            Ok(out)
        };
        let p = PairedAlgebra::new(g, pairing, vectors("first")?, vectors("second")?).map_err(|err| self.err(err.to_string()))?;
        Ok(Object::Manin(p))
    }
}
