//! Line-oriented instance files describing a ring, modules, submodules and
//! ring elements.
//!
//! ```text
//! # comments run to the end of the line
//! ring VARS = x,y,z,w ; char = 32003 ; ideal = x^3, x^2*y, x*y^2, y^3, x*w
//! module X = free deg 0
//! module M = coker [ x^2 ]
//! module P = coker deg 0,1 [ x, y ; 0, z ]
//! submodule N of X = x*y, y^2, z, w
//! module XmodN = quotient X by N
//! module NN = image N
//! element e = z + w
//! ```
//!
//! `char = 0` selects the rationals. A ring with no ideal generators must be
//! flagged `artinian = false`. Coker rows are the rows of the presentation
//! matrix (one per generator), so each column is a relation.

use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;
use thiserror::Error;

use crate::exactla::{Field, Scalar};
use crate::gmod::hom::presentation_of;
use crate::gmod::module::{Module, PresentedModule};
use crate::gmod::window::{vector_coords, SubmoduleWindow};
use crate::ring::{Monomial, Ring, RingElem};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Source position, 1-based. Ignored by equality so that printed and
/// re-parsed files compare equal.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Pos) -> bool {
        true
    }
}
impl Eq for Pos {}

impl Pos {
    fn error(self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column, message: message.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleDef {
    Free(Vec<i64>),
    /// Cover degrees and matrix rows.
    Coker(Vec<i64>, Vec<Vec<RingElem>>),
    /// `quotient X by N`.
    Quotient(String, String),
    /// `image N`.
    Image(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Module { name: String, def: ModuleDef, at: Pos },
    Submodule { name: String, ambient: String, gens: Vec<(Vec<RingElem>, Pos)>, at: Pos },
    Element { name: String, value: RingElem, at: Pos },
}

impl Item {
    pub fn name(&self) -> &str {
        match self {
            Item::Module { name, .. } | Item::Submodule { name, .. } | Item::Element { name, .. } => name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub ring: Ring,
    pub artinian: Option<bool>,
    pub items: Vec<Item>,
}

/// A submodule given by generators, realized as a window on demand.
#[derive(Clone, Debug)]
pub struct SubmoduleSpec {
    pub ambient: String,
    pub gens: Vec<(i64, Vec<Scalar>)>,
}

/// The library objects an instance file describes.
#[derive(Clone, Debug)]
pub struct Instance {
    pub ring: Ring,
    pub modules: BTreeMap<String, Module>,
    pub submodules: BTreeMap<String, SubmoduleSpec>,
    pub elements: BTreeMap<String, RingElem>,
}

impl Instance {
    pub fn module(&self, name: &str) -> Option<&Module> {
        self.modules.get(name)
    }

    /// The named submodule, exact in degrees up to `hi`.
    pub fn window(&self, name: &str, hi: i64) -> Option<SubmoduleWindow> {
        let spec = self.submodules.get(name)?;
        let x = self.modules.get(&spec.ambient)?;
        Some(SubmoduleWindow::span_closure_coords(x, &spec.gens, hi))
    }

    /// Highest degree among a submodule's generators.
    pub fn generator_top(&self, name: &str) -> Option<i64> {
        self.submodules.get(name)?.gens.iter().map(|(d, _)| *d).max()
    }
}

// ---------------------------------------------------------------- lexing

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    at: Pos,
}

fn lex_line(line: &str, lineno: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let at = Pos { line: lineno, column: i + 1 };
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), at });
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Token { tok: Tok::Int(chars[start..i].iter().collect()), at });
        } else if "=;,()[]^*+-/".contains(c) {
            out.push(Token { tok: Tok::Sym(c), at });
            i += 1;
        } else {
            return Err(at.error(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Cursor<'a> {
    toks: &'a [Token],
    i: usize,
    end: Pos,
}

impl<'a> Cursor<'a> {
    fn new(toks: &'a [Token], lineno: usize, len: usize) -> Cursor<'a> {
        Cursor { toks, i: 0, end: Pos { line: lineno, column: len + 1 } }
    }
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.tok)
    }
    fn pos(&self) -> Pos {
        self.toks.get(self.i).map_or(self.end, |t| t.at)
    }
    fn done(&self) -> bool {
        self.i >= self.toks.len()
    }
    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.i).map(|t| &t.tok);
        self.i += 1;
        t
    }
    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.i += 1;
            true
        } else {
            false
        }
    }
    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.pos().error(format!("expected `{c}`")))
        }
    }
    fn keyword(&mut self, k: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == k => {
                self.i += 1;
                Ok(())
            }
            _ => Err(self.pos().error(format!("expected `{k}`"))),
        }
    }
    fn is_keyword(&self, k: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == k)
    }
    fn ident(&mut self) -> Result<(String, Pos), ParseError> {
        let at = self.pos();
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.i += 1;
                Ok((s, at))
            }
            _ => Err(at.error("expected a name")),
        }
    }
    fn integer(&mut self) -> Result<i64, ParseError> {
        let at = self.pos();
        let neg = self.eat('-');
        match self.bump() {
            Some(Tok::Int(s)) => {
                let v: i64 = s.parse().map_err(|_| at.error("integer out of range"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(at.error("expected an integer")),
        }
    }
    fn finish(&self) -> Result<(), ParseError> {
        if self.done() {
            Ok(())
        } else {
            Err(self.pos().error("unexpected trailing input"))
        }
    }
}

// ---------------------------------------------------------------- polynomials

fn parse_coefficient(c: &mut Cursor, field: Field) -> Result<Scalar, ParseError> {
    let at = c.pos();
    let num: BigInt = match c.bump() {
        Some(Tok::Int(s)) => s.parse().expect("digits"),
        _ => return Err(at.error("expected a number")),
    };
    if c.eat('/') {
        let dat = c.pos();
        let den: BigInt = match c.bump() {
            Some(Tok::Int(s)) => s.parse().expect("digits"),
            _ => return Err(dat.error("expected a denominator")),
        };
        return field.from_ratio(&num, &den).map_err(|_| dat.error("denominator is zero in the field"));
    }
    Ok(field.from_bigint(&num))
}

/// A term and its degree as written (`None` for a zero coefficient).
fn parse_term(c: &mut Cursor, ring: &Ring) -> Result<(RingElem, Option<u64>), ParseError> {
    let field = ring.field();
    let n = ring.nvars();
    let mut coeff = field.one();
    let mut exps = vec![0u32; n];
    loop {
        let at = c.pos();
        match c.peek().cloned() {
            Some(Tok::Int(_)) => coeff = field.mul(&coeff, &parse_coefficient(c, field)?),
            Some(Tok::Ident(name)) => {
                c.bump();
                let i = ring.var_index(&name).ok_or_else(|| at.error(format!("unknown variable `{name}`")))?;
                let mut e = 1u32;
                let eat = c.pos();
                if c.eat('^') {
                    e = match c.bump() {
                        Some(Tok::Int(s)) => s.parse().map_err(|_| eat.error("malformed exponent"))?,
                        _ => return Err(eat.error("malformed exponent")),
                    };
                }
                exps[i] = exps[i].checked_add(e).ok_or_else(|| at.error("malformed exponent"))?;
            }
            _ => return Err(at.error("expected a number or a variable")),
        }
        if !c.eat('*') {
            break;
        }
    }
    let degree = (!field.is_zero(&coeff)).then(|| exps.iter().map(|&e| e as u64).sum());
    Ok((RingElem::monomial(ring, Monomial::new(exps), coeff), degree))
}

/// Parses a sum of terms. Homogeneity is checked on the terms as written,
/// before reduction modulo the ideal.
fn parse_poly_at(c: &mut Cursor, ring: &Ring) -> Result<RingElem, ParseError> {
    let start = c.pos();
    let mut acc = RingElem::zero(ring);
    let mut degree = None;
    let mut neg = c.eat('-');
    if !neg {
        c.eat('+');
    }
    loop {
        let (t, d) = parse_term(c, ring)?;
        if let Some(d) = d {
            if degree.is_some_and(|e| e != d) {
                return Err(start.error("element is not homogeneous"));
            }
            degree = Some(d);
        }
        acc = if neg { acc.sub(&t) } else { acc.add(&t) }.expect("same ring");
        if c.eat('+') {
            neg = false;
        } else if c.eat('-') {
            neg = true;
        } else {
            return Ok(acc);
        }
    }
}

/// Parses a polynomial expression such as `3*x^2*y - y^3 + 1/2*z`.
pub fn parse_poly(ring: &Ring, text: &str) -> Result<RingElem, ParseError> {
    let toks = lex_line(text, 1)?;
    let mut c = Cursor::new(&toks, 1, text.chars().count());
    let p = parse_poly_at(&mut c, ring)?;
    c.finish()?;
    Ok(p)
}

fn parse_vector(c: &mut Cursor, ring: &Ring) -> Result<Vec<RingElem>, ParseError> {
    if c.eat('(') {
        let mut v = vec![parse_poly_at(c, ring)?];
        while c.eat(',') {
            v.push(parse_poly_at(c, ring)?);
        }
        c.expect(')')?;
        Ok(v)
    } else {
        Ok(vec![parse_poly_at(c, ring)?])
    }
}

// ---------------------------------------------------------------- statements

fn parse_ring(c: &mut Cursor) -> Result<(Ring, Option<bool>), ParseError> {
    c.keyword("ring")?;
    c.keyword("VARS")?;
    c.expect('=')?;
    let mut vars = vec![c.ident()?];
    while c.eat(',') {
        vars.push(c.ident()?);
    }
    let mut field = Field::DEFAULT;
    let mut ideal_text: Option<(usize, usize)> = None;
    let mut artinian = None;
    while c.eat(';') {
        let (key, kat) = c.ident()?;
        c.expect('=')?;
        match key.as_str() {
            "char" => {
                let at = c.pos();
                let p = c.integer()?;
                field = match p {
                    0 => Field::Rational,
                    p if p > 0 => Field::prime(p as u64).map_err(|_| at.error(format!("characteristic {p} is not a prime")))?,
                    _ => return Err(at.error("characteristic must be 0 or a prime")),
                };
            }
            "ideal" => {
                let start = c.i;
                while !c.done() && c.peek() != Some(&Tok::Sym(';')) {
                    c.bump();
                }
                ideal_text = Some((start, c.i));
            }
            "artinian" => {
                let (v, vat) = c.ident()?;
                artinian = Some(match v.as_str() {
                    "true" => true,
                    "false" => false,
                    _ => return Err(vat.error("expected `true` or `false`")),
                });
            }
            _ => return Err(kat.error(format!("unknown ring field `{key}`"))),
        }
    }
    c.finish()?;
    for (v, at) in &vars {
        if vars.iter().filter(|(w, _)| w == v).count() > 1 {
            return Err(at.error(format!("duplicate variable `{v}`")));
        }
    }
    let names: Vec<String> = vars.iter().map(|(v, _)| v.clone()).collect();
    let poly = Ring::from_names(names.clone(), field, &[]).map_err(|e| vars[0].1.error(e.to_string()))?;
    let mut ideal = Vec::new();
    if let Some((start, end)) = ideal_text {
        let mut sub = Cursor { toks: &c.toks[..end], i: start, end: c.toks.get(end).map_or(c.end, |t| t.at) };
        if !sub.done() {
            loop {
                let at = sub.pos();
                let g = parse_poly_at(&mut sub, &poly)?;
                if g.terms().len() != 1 {
                    return Err(at.error("ideal generators must be monomials"));
                }
                ideal.push(g.terms().keys().next().expect("one term").clone());
                if !sub.eat(',') {
                    break;
                }
            }
            sub.finish()?;
        }
    }
    let at = vars[0].1;
    if ideal.is_empty() && artinian != Some(false) {
        return Err(at.error("ring must be a proper quotient or explicitly flagged artinian=false"));
    }
    let ring = Ring::from_names(names, field, &ideal).map_err(|e| at.error(e.to_string()))?;
    if let Some(a) = artinian {
        if a != ring.is_artinian() {
            return Err(at.error(format!("ring flagged artinian = {a} but the ideal says otherwise")));
        }
    }
    Ok((ring, artinian))
}

fn degree_list(c: &mut Cursor) -> Result<Vec<i64>, ParseError> {
    let mut v = vec![c.integer()?];
    while c.eat(',') {
        v.push(c.integer()?);
    }
    Ok(v)
}

fn parse_item(c: &mut Cursor, ring: &Ring) -> Result<Item, ParseError> {
    let at = c.pos();
    let (kw, _) = c.ident()?;
    match kw.as_str() {
        "module" => {
            let (name, _) = c.ident()?;
            c.expect('=')?;
            let (kind, kat) = c.ident()?;
            let def = match kind.as_str() {
                "free" => {
                    c.keyword("deg")?;
                    ModuleDef::Free(degree_list(c)?)
                }
                "coker" => {
                    let degs = if c.is_keyword("deg") {
                        c.bump();
                        Some(degree_list(c)?)
                    } else {
                        None
                    };
                    c.expect('[')?;
                    let mut rows = Vec::new();
                    loop {
                        let mut row = vec![parse_poly_at(c, ring)?];
                        while c.eat(',') {
                            row.push(parse_poly_at(c, ring)?);
                        }
                        rows.push(row);
                        if !c.eat(';') {
                            break;
                        }
                    }
                    c.expect(']')?;
                    if rows.iter().any(|r| r.len() != rows[0].len()) {
                        return Err(kat.error("matrix rows have different lengths"));
                    }
                    let degs = degs.unwrap_or_else(|| vec![0; rows.len()]);
                    if degs.len() != rows.len() {
                        return Err(kat.error(format!("{} degrees for {} rows", degs.len(), rows.len())));
                    }
                    ModuleDef::Coker(degs, rows)
                }
                "quotient" => {
                    let (x, _) = c.ident()?;
                    c.keyword("by")?;
                    let (n, _) = c.ident()?;
                    ModuleDef::Quotient(x, n)
                }
                "image" => ModuleDef::Image(c.ident()?.0),
                _ => return Err(kat.error(format!("unknown module kind `{kind}`"))),
            };
            c.finish()?;
            Ok(Item::Module { name, def, at })
        }
        "submodule" => {
            let (name, _) = c.ident()?;
            c.keyword("of")?;
            let (ambient, _) = c.ident()?;
            c.expect('=')?;
            let mut gens = Vec::new();
            if !c.done() {
                loop {
                    let gat = c.pos();
                    gens.push((parse_vector(c, ring)?, gat));
                    if !c.eat(',') {
                        break;
                    }
                }
            }
            c.finish()?;
            Ok(Item::Submodule { name, ambient, gens, at })
        }
        "element" => {
            let (name, _) = c.ident()?;
            c.expect('=')?;
            let value = parse_poly_at(c, ring)?;
            c.finish()?;
            Ok(Item::Element { name, value, at })
        }
        _ => Err(at.error(format!("unknown statement `{kw}`"))),
    }
}

/// Parses and validates an instance file.
pub fn parse_instance(text: &str) -> Result<InstanceFile, ParseError> {
    let mut ring: Option<(Ring, Option<bool>)> = None;
    let mut items = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        let toks = lex_line(line, lineno)?;
        if toks.is_empty() {
            continue;
        }
        let mut c = Cursor::new(&toks, lineno, line.chars().count());
        match &ring {
            None => ring = Some(parse_ring(&mut c)?),
            Some((r, _)) => items.push(parse_item(&mut c, r)?),
        }
    }
    let (ring, artinian) = ring.ok_or_else(|| Pos { line: 1, column: 1 }.error("missing ring line"))?;
    let file = InstanceFile { ring, artinian, items };
    file.build()?;
    Ok(file)
}

impl InstanceFile {
    /// Builds the modules. Presentations of `image` modules that cannot be
    /// proved complete are computed up to degree 8.
    pub fn build(&self) -> Result<Instance, ParseError> {
        self.build_with_window(8)
    }

    pub fn build_with_window(&self, window: i64) -> Result<Instance, ParseError> {
        let ring = &self.ring;
        let mut inst = Instance {
            ring: ring.clone(),
            modules: BTreeMap::new(),
            submodules: BTreeMap::new(),
            elements: BTreeMap::new(),
        };
        for item in &self.items {
            let name = item.name();
            let at = match item {
                Item::Module { at, .. } | Item::Submodule { at, .. } | Item::Element { at, .. } => *at,
            };
            if inst.modules.contains_key(name) || inst.submodules.contains_key(name) || inst.elements.contains_key(name) {
                return Err(at.error(format!("`{name}` is defined twice")));
            }
            match item {
                Item::Module { def, .. } => {
                    let m = match def {
                        ModuleDef::Free(degs) => PresentedModule::free(ring, degs.clone()),
                        ModuleDef::Coker(degs, rows) => {
                            let cols: Vec<Vec<RingElem>> =
                                (0..rows[0].len()).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
                            PresentedModule::coker_of(ring, degs.clone(), cols).map_err(|e| at.error(e.to_string()))?
                        }
                        ModuleDef::Quotient(x, n) => {
                            let xm = inst.modules.get(x).ok_or_else(|| at.error(format!("unknown module `{x}`")))?;
                            let spec = inst.submodules.get(n).ok_or_else(|| at.error(format!("unknown submodule `{n}`")))?;
                            if &spec.ambient != x {
                                return Err(at.error(format!("`{n}` is not a submodule of `{x}`")));
                            }
                            let gens: Vec<Vec<RingElem>> =
                                spec.gens.iter().map(|(d, v)| xm.cover().elements_at(*d, v)).collect();
                            PresentedModule::quotient(xm, &gens).map_err(|e| at.error(e.to_string()))?
                        }
                        ModuleDef::Image(n) => {
                            let spec = inst.submodules.get(n).ok_or_else(|| at.error(format!("unknown submodule `{n}`")))?;
                            let top = spec.gens.iter().map(|(d, _)| *d).max().unwrap_or(0);
                            let w = inst.window(n, top).expect("submodule is registered");
                            presentation_of(w.ambient(), &w.minimal_generators(), window.max(top + 1))
                                .map_err(|e| at.error(e.to_string()))?
                        }
                    };
                    inst.modules.insert(name.to_string(), m);
                }
                Item::Submodule { ambient, gens, .. } => {
                    let x = inst.modules.get(ambient).ok_or_else(|| at.error(format!("unknown module `{ambient}`")))?;
                    let mut coords = Vec::new();
                    for (g, gat) in gens {
                        match vector_coords(x, g) {
                            Ok(Some(c)) => coords.push(c),
                            Ok(None) => {}
                            Err(e) => return Err(gat.error(e.to_string())),
                        }
                    }
                    inst.submodules.insert(name.to_string(), SubmoduleSpec { ambient: ambient.clone(), gens: coords });
                }
                Item::Element { value, .. } => {
                    inst.elements.insert(name.to_string(), value.clone());
                }
            }
        }
        Ok(inst)
    }
}

fn join<T: fmt::Display>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for InstanceFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.ring;
        let ch = match r.field() {
            Field::Rational => 0,
            Field::Prime(p) => p,
        };
        write!(f, "ring VARS = {} ; char = {ch} ; ideal = ", r.vars().join(","))?;
        write!(f, "{}", r.ideal().iter().map(|m| r.format_monomial(m)).collect::<Vec<_>>().join(", "))?;
        if let Some(a) = self.artinian {
            write!(f, " ; artinian = {a}")?;
        }
        writeln!(f)?;
        for item in &self.items {
            match item {
                Item::Module { name, def, .. } => {
                    write!(f, "module {name} = ")?;
                    match def {
                        ModuleDef::Free(d) => writeln!(f, "free deg {}", join(d, ","))?,
                        ModuleDef::Coker(d, rows) => {
                            let rows: Vec<String> = rows.iter().map(|r| join(r, ", ")).collect();
                            writeln!(f, "coker deg {} [ {} ]", join(d, ","), rows.join(" ; "))?
                        }
                        ModuleDef::Quotient(x, n) => writeln!(f, "quotient {x} by {n}")?,
                        ModuleDef::Image(n) => writeln!(f, "image {n}")?,
                    }
                }
                Item::Submodule { name, ambient, gens, .. } => {
                    let gens: Vec<String> = gens
                        .iter()
                        .map(|(g, _)| if g.len() == 1 { g[0].to_string() } else { format!("({})", join(g, ", ")) })
                        .collect();
                    writeln!(f, "submodule {name} of {ambient} = {}", gens.join(", "))?
                }
                Item::Element { name, value, .. } => writeln!(f, "element {name} = {value}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BURCH_NOT_RIGID: &str = "\
# fixture
ring VARS = x,y,z,w ; char = 32003 ; ideal = x^3, x^2*y, x*y^2, y^3, x*w
module X = free deg 0
submodule N of X = x*y, y^2, z, w
module XmodN = quotient X by N
module M = coker [ x^2 ]
element w = w
";

    #[test]
    fn parses_fixture() {
        let f = parse_instance(BURCH_NOT_RIGID).unwrap();
        assert_eq!(f.ring.nvars(), 4);
        assert_eq!(f.ring.ideal().len(), 5);
        let inst = f.build().unwrap();
        let q = inst.module("XmodN").unwrap();
        assert_eq!((0..4).map(|d| q.dim(d)).collect::<Vec<_>>(), vec![1, 2, 1, 0]);
    }

    #[test]
    fn round_trip() {
        let f = parse_instance(BURCH_NOT_RIGID).unwrap();
        let g = parse_instance(&f.to_string()).unwrap();
        assert_eq!(f, g);
        let text = "ring VARS = u,v ; char = 0 ; ideal = u*v\nmodule P = coker deg 0,1 [ u, 1/2*v ; 0, 3 ]\nelement e = -3*u + v\n";
        let f = parse_instance(text).unwrap();
        assert_eq!(parse_instance(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn errors_carry_locations() {
        let e = parse_instance("ring VARS = x,y ; char = 32003 ; ideal =\n").unwrap_err();
        assert!(e.message.contains("ring must be a proper quotient or explicitly flagged artinian=false"));
        assert!(parse_instance("ring VARS = x,y ; ideal = ; artinian = false\n").is_ok());
        let e = parse_instance("ring VARS = x ; ideal = x^\n").unwrap_err();
        assert_eq!((e.line, e.column, e.message.as_str()), (1, 26, "malformed exponent"));
        let e = parse_instance("ring VARS = x,y ; ideal = x^2, y^2\nelement e = x + y^2\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 13));
        let e = parse_instance("ring VARS = x,y ; ideal = x + y\n").unwrap_err();
        assert!(e.message.contains("monomials"));
        let e = parse_instance("ring VARS = x ; ideal = x^2\nmodule Q = quotient X by N\n").unwrap_err();
        assert!(e.message.contains("unknown module"));
    }
}
