//! The `.khr` text format.
//!
//! ```text
//! # comment
//! hyperring z2 arity (2, 2)
//! elements: 0 1
//! zero: 0
//! one: 1
//! neg: 0->0 1->1
//! f(0,0): {0}
//! f(0,1): {1}
//! f(1,1): {0}
//! g(0,0): 0
//! g(0,1): 0
//! g(1,1): 1
//! ```
//!
//! Table keys list their arguments in carrier order (the order of the
//! `elements:` line); exactly one key per multiset is allowed.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::error::StructureError;
use crate::ring::{HyperRing, RingShape};
use crate::set::{Elem, ElementSet};
use crate::tuples::Multisets;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Malformed tokens or punctuation.
    Lexical,
    /// Well-formed lines that do not fit together.
    Structural,
    /// A required declaration or table cell is absent.
    Completeness,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Lexical => "lexical",
            ParseErrorKind::Structural => "structural",
            ParseErrorKind::Completeness => "completeness",
        })
    }
}

/// A diagnostic with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind} error: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

/// Where a token or cell sits in the source.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub column: usize,
    pub end_column: usize,
}

/// Parsed text together with the location of every table cell.
#[derive(Debug, Clone)]
pub struct SourceDocument {
    pub text: String,
    pub ring: HyperRing,
    /// Keyed by table (`'f'` or `'g'`) and the sorted argument tuple.
    pub spans: BTreeMap<(char, Vec<Elem>), Span>,
}

impl SourceDocument {
    pub fn span_of(&self, table: char, key: &[Elem]) -> Option<Span> {
        let mut k = key.to_vec();
        k.sort_unstable();
        self.spans.get(&(table, k)).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Punct(&'static str),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    col: usize,
    end: usize,
}

const PUNCT: [&str; 7] = ["->", "(", ")", "{", "}", ",", ":"];

fn lex(line: &str, line_no: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = vec![];
    let mut i = 0;
    let starts_punct = |i: usize| PUNCT.iter().find(|p| chars[i..].iter().take(p.len()).copied().eq(p.chars()));
    while i < chars.len() {
        let c = chars[i];
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if let Some(p) = starts_punct(i) {
            out.push(Token { tok: Tok::Punct(p), col: i + 1, end: i + p.len() });
            i += p.len();
            continue;
        }
        let start = i;
        while i < chars.len() && !chars[i].is_whitespace() && chars[i] != '#' && starts_punct(i).is_none() {
            if chars[i].is_control() {
                return Err(ParseError {
                    line: line_no,
                    column: i + 1,
                    kind: ParseErrorKind::Lexical,
                    message: format!("unexpected control character {:?}", chars[i]),
                });
            }
            i += 1;
        }
        out.push(Token { tok: Tok::Word(chars[start..i].iter().collect()), col: start + 1, end: i });
    }
    Ok(out)
}

/// Characters that cannot appear in an element name.
fn is_reserved(c: char) -> bool {
    c.is_whitespace() || "(){},:#".contains(c)
}

struct Cursor<'a> {
    toks: &'a [Token],
    pos: usize,
    line: usize,
    line_len: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, column: usize, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column, kind, message: message.into() }
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.line_len + 1, |t| t.col)
    }

    fn peek(&self) -> Option<&'a Token> {
        self.toks.get(self.pos)
    }

    fn done(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn punct(&mut self, p: &'static str) -> Result<&'a Token, ParseError> {
        match self.toks.get(self.pos) {
            Some(t) if t.tok == Tok::Punct(p) => {
                self.pos += 1;
                Ok(t)
            }
            Some(t) => Err(self.err(t.col, ParseErrorKind::Lexical, format!("expected `{p}`, found {}", show(&t.tok)))),
            None => Err(self.err(self.here(), ParseErrorKind::Lexical, format!("expected `{p}` before end of line"))),
        }
    }

    fn eat(&mut self, p: &'static str) -> bool {
        if self.peek().is_some_and(|t| t.tok == Tok::Punct(p)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self, what: &str) -> Result<(&'a str, &'a Token), ParseError> {
        match self.toks.get(self.pos) {
            Some(t) => match &t.tok {
                Tok::Word(w) => {
                    self.pos += 1;
                    Ok((w.as_str(), t))
                }
                other => Err(self.err(t.col, ParseErrorKind::Lexical, format!("expected {what}, found {}", show(other)))),
            },
            None => Err(self.err(self.here(), ParseErrorKind::Lexical, format!("expected {what} before end of line"))),
        }
    }

    fn end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.err(t.col, ParseErrorKind::Lexical, format!("unexpected {} after the declaration", show(&t.tok)))),
        }
    }
}

fn show(t: &Tok) -> String {
    match t {
        Tok::Word(w) => format!("`{w}`"),
        Tok::Punct(p) => format!("`{p}`"),
    }
}

#[derive(Default)]
struct Builder {
    name: Option<String>,
    header: Option<(usize, usize)>,
    arity: (usize, usize),
    names: Vec<String>,
    index: BTreeMap<String, Elem>,
    elements_line: Option<usize>,
    zero: Option<(Elem, usize)>,
    one: Option<(Elem, usize)>,
    neg: BTreeMap<Elem, (Elem, Span)>,
    neg_line: Option<usize>,
    f: BTreeMap<Vec<Elem>, ElementSet>,
    g: BTreeMap<Vec<Elem>, Elem>,
    spans: BTreeMap<(char, Vec<Elem>), Span>,
    last_line: usize,
}

impl Builder {
    fn elem(&self, c: &Cursor, (w, t): (&str, &Token)) -> Result<Elem, ParseError> {
        self.index
            .get(w)
            .copied()
            .ok_or_else(|| c.err(t.col, ParseErrorKind::Structural, format!("unknown element `{w}`")))
    }

    fn next_elem(&self, c: &mut Cursor) -> Result<Elem, ParseError> {
        let tok = c.word("an element")?;
        self.elem(c, tok)
    }

    fn need_elements(&self, c: &Cursor, col: usize) -> Result<(), ParseError> {
        if self.names.is_empty() {
            return Err(c.err(col, ParseErrorKind::Structural, "the `elements:` line must come first"));
        }
        Ok(())
    }

    fn line(&mut self, c: &mut Cursor) -> Result<(), ParseError> {
        let (kw, kt) = c.word("a declaration")?;
        if kw != "hyperring" && self.header.is_none() {
            return Err(c.err(kt.col, ParseErrorKind::Structural, "expected the `hyperring NAME arity (M, N)` header first"));
        }
        match kw {
            "hyperring" => self.header_line(c, kt),
            "elements" => self.elements_line(c, kt),
            "zero" | "one" => self.role_line(c, kw, kt),
            "neg" => self.neg_line(c, kt),
            "f" | "g" => self.cell_line(c, kw, kt),
            other => Err(c.err(kt.col, ParseErrorKind::Structural, format!("unknown declaration `{other}`"))),
        }
    }

    fn header_line(&mut self, c: &mut Cursor, kt: &Token) -> Result<(), ParseError> {
        if let Some((line, _)) = self.header {
            return Err(c.err(kt.col, ParseErrorKind::Structural, format!("second header; the first is on line {line}")));
        }
        let (name, _) = c.word("a structure name")?;
        let (kw, t) = c.word("`arity`")?;
        if kw != "arity" {
            return Err(c.err(t.col, ParseErrorKind::Lexical, format!("expected `arity`, found `{kw}`")));
        }
        c.punct("(")?;
        let m = arity(c)?;
        c.punct(",")?;
        let n = arity(c)?;
        c.punct(")")?;
        c.end()?;
        self.name = Some(name.to_string());
        self.header = Some((c.line, kt.col));
        self.arity = (m, n);
        Ok(())
    }

    fn elements_line(&mut self, c: &mut Cursor, kt: &Token) -> Result<(), ParseError> {
        if let Some(line) = self.elements_line {
            return Err(c.err(kt.col, ParseErrorKind::Structural, format!("elements already declared on line {line}")));
        }
        c.punct(":")?;
        while !c.done() {
            let (w, t) = c.word("an element name")?;
            if self.index.contains_key(w) {
                return Err(c.err(t.col, ParseErrorKind::Structural, format!("duplicate element `{w}`")));
            }
            self.index.insert(w.to_string(), self.names.len());
            self.names.push(w.to_string());
        }
        if self.names.is_empty() {
            return Err(c.err(kt.col, ParseErrorKind::Structural, "the carrier is empty"));
        }
        if self.names.len() > crate::set::MAX_CARRIER {
            return Err(c.err(kt.col, ParseErrorKind::Structural, StructureError::CarrierTooLarge(self.names.len()).to_string()));
        }
        self.elements_line = Some(c.line);
        Ok(())
    }

    fn role_line(&mut self, c: &mut Cursor, kw: &str, kt: &Token) -> Result<(), ParseError> {
        self.need_elements(c, kt.col)?;
        c.punct(":")?;
        let e = self.next_elem(c)?;
        c.end()?;
        let slot = if kw == "zero" { &mut self.zero } else { &mut self.one };
        if let Some((_, line)) = slot {
            return Err(c.err(kt.col, ParseErrorKind::Structural, format!("`{kw}` already declared on line {line}")));
        }
        *slot = Some((e, c.line));
        Ok(())
    }

    fn neg_line(&mut self, c: &mut Cursor, kt: &Token) -> Result<(), ParseError> {
        self.need_elements(c, kt.col)?;
        c.punct(":")?;
        self.neg_line.get_or_insert(c.line);
        while !c.done() {
            let from_tok = c.word("an element")?;
            let from = self.elem(c, from_tok)?;
            c.punct("->")?;
            let to_tok = c.word("an element")?;
            let to = self.elem(c, to_tok)?;
            let span = Span { line: c.line, column: from_tok.1.col, end_column: to_tok.1.end };
            if let Some((_, prev)) = self.neg.get(&from) {
                return Err(c.err(
                    from_tok.1.col,
                    ParseErrorKind::Structural,
                    format!("neg of `{}` already given on line {}", from_tok.0, prev.line),
                ));
            }
            self.neg.insert(from, (to, span));
        }
        Ok(())
    }

    fn cell_line(&mut self, c: &mut Cursor, kw: &str, kt: &Token) -> Result<(), ParseError> {
        self.need_elements(c, kt.col)?;
        let table = if kw == "f" { 'f' } else { 'g' };
        let expected = if table == 'f' { self.arity.0 } else { self.arity.1 };
        c.punct("(")?;
        let mut key = vec![];
        loop {
            key.push(self.next_elem(c)?);
            if c.eat(")") {
                break;
            }
            c.punct(",")?;
        }
        if key.len() != expected {
            return Err(c.err(
                kt.col,
                ParseErrorKind::Structural,
                format!("{table} takes {expected} arguments, this key has {}", key.len()),
            ));
        }
        if key.windows(2).any(|w| w[0] > w[1]) {
            let mut sorted = key.clone();
            sorted.sort_unstable();
            let names: Vec<&str> = sorted.iter().map(|&e| self.names[e].as_str()).collect();
            let canonical = format!("{table}({})", names.join(","));
            if let Some(prev) = self.spans.get(&(table, sorted)) {
                return Err(c.err(
                    kt.col,
                    ParseErrorKind::Structural,
                    format!("duplicate key: this is the same multiset as {canonical} on line {}", prev.line),
                ));
            }
            return Err(c.err(
                kt.col,
                ParseErrorKind::Structural,
                format!("non-canonical key; list arguments in carrier order: {canonical}"),
            ));
        }
        let colon = c.punct(":")?;
        let span = Span { line: c.line, column: kt.col, end_column: c.toks.last().map_or(colon.end, |t| t.end) };
        if let Some(prev) = self.spans.get(&(table, key.clone())) {
            return Err(c.err(kt.col, ParseErrorKind::Structural, format!("duplicate {table} cell; first given on line {}", prev.line)));
        }
        if table == 'f' {
            let open = c.punct("{")?;
            let mut value = ElementSet::EMPTY;
            if !c.eat("}") {
                loop {
                    value.insert(self.next_elem(c)?);
                    if c.eat("}") {
                        break;
                    }
                    c.punct(",")?;
                }
            }
            if value.is_empty() {
                return Err(c.err(open.col, ParseErrorKind::Structural, "f values must be nonempty"));
            }
            self.f.insert(key.clone(), value);
        } else {
            let v = self.next_elem(c)?;
            self.g.insert(key.clone(), v);
        }
        c.end()?;
        self.spans.insert((table, key), span);
        Ok(())
    }

    fn finish(self, text: &str) -> Result<SourceDocument, ParseError> {
        let eof = |message: String| ParseError {
            line: self.last_line + 1,
            column: 1,
            kind: ParseErrorKind::Completeness,
            message,
        };
        let Some((header_line, header_col)) = self.header else {
            return Err(eof("missing `hyperring NAME arity (M, N)` header".into()));
        };
        if self.names.is_empty() {
            return Err(eof("missing `elements:` declaration".into()));
        }
        let Some((zero, _)) = self.zero else {
            return Err(eof("missing `zero:` declaration".into()));
        };
        let Some(neg_line) = self.neg_line else {
            return Err(eof("missing `neg:` declaration".into()));
        };
        if let Some(e) = (0..self.names.len()).find(|e| !self.neg.contains_key(e)) {
            return Err(ParseError {
                line: neg_line,
                column: 1,
                kind: ParseErrorKind::Completeness,
                message: format!("neg has no entry for `{}`", self.names[e]),
            });
        }
        let (m, n) = self.arity;
        for (table, arity) in [('f', m), ('g', n)] {
            let mut it = Multisets::new(self.names.len(), arity);
            while let Some(t) = it.next_tuple() {
                if !self.spans.contains_key(&(table, t.to_vec())) {
                    let names: Vec<&str> = t.iter().map(|&e| self.names[e].as_str()).collect();
                    return Err(eof(format!("missing {table} cell {table}({})", names.join(","))));
                }
            }
        }
        let shape = RingShape {
            name: self.name.clone().unwrap_or_default(),
            m,
            n,
            names: self.names.clone(),
            zero,
            unit: self.one.map(|(u, _)| u),
            neg: (0..self.names.len()).map(|e| self.neg[&e].0).collect(),
        };
        let ring = HyperRing::from_cells(shape, &self.f, &self.g).map_err(|e| ParseError {
            line: header_line,
            column: header_col,
            kind: ParseErrorKind::Structural,
            message: e.to_string(),
        })?;
        Ok(SourceDocument { text: text.to_string(), ring, spans: self.spans })
    }
}

fn arity(c: &mut Cursor) -> Result<usize, ParseError> {
    let (w, t) = c.word("an arity")?;
    match w.parse::<usize>() {
        Ok(a) if a >= 2 => Ok(a),
        _ => Err(c.err(t.col, ParseErrorKind::Structural, format!("arity must be an integer of at least 2, found `{w}`"))),
    }
}

/// Parse a document, keeping cell locations.
pub fn parse_document(text: &str) -> Result<SourceDocument, ParseError> {
    let mut b = Builder::default();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let toks = lex(raw, line_no)?;
        b.last_line = line_no;
        if toks.is_empty() {
            continue;
        }
        let mut c = Cursor { toks: &toks, pos: 0, line: line_no, line_len: raw.chars().count() };
        b.line(&mut c)?;
    }
    b.finish(text)
}

pub fn parse_hyperring(text: &str) -> Result<HyperRing, ParseError> {
    parse_document(text).map(|d| d.ring)
}

/// A name that cannot be written in the format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("element name `{0}` cannot be written: names must be nonempty and avoid whitespace, `->` and (){{}},:#")]
pub struct UnwritableName(pub String);

/// Write `h` in canonical form: cells in multiset order, one per line. The
/// structure name has reserved characters replaced by `_`.
pub fn serialize_hyperring(h: &HyperRing) -> Result<String, UnwritableName> {
    for name in h.names() {
        if name.is_empty() || name.contains("->") || name.chars().any(is_reserved) {
            return Err(UnwritableName(name.clone()));
        }
    }
    let mut title: String = h.name().chars().map(|c| if is_reserved(c) { '_' } else { c }).collect();
    if title.is_empty() {
        title.push('_');
    }
    let name = |e: Elem| h.elem_name(e);
    let mut out = format!("hyperring {title} arity ({}, {})\n", h.m(), h.n());
    out.push_str(&format!("elements: {}\n", h.names().join(" ")));
    out.push_str(&format!("zero: {}\n", name(h.zero())));
    if let Some(u) = h.unit() {
        out.push_str(&format!("one: {}\n", name(u)));
    }
    let neg: Vec<String> = h.elements().map(|a| format!("{}->{}", name(a), name(h.neg(a)))).collect();
    out.push_str(&format!("neg: {}\n", neg.join(" ")));
    let key = |t: &[Elem]| t.iter().map(|&e| name(e)).collect::<Vec<_>>().join(",");
    let mut it = Multisets::new(h.size(), h.m());
    while let Some(t) = it.next_tuple() {
        let v: Vec<&str> = h.f(t).iter().map(name).collect();
        out.push_str(&format!("f({}): {{{}}}\n", key(t), v.join(",")));
    }
    let mut it = Multisets::new(h.size(), h.n());
    while let Some(t) = it.next_tuple() {
        out.push_str(&format!("g({}): {}\n", key(t), name(h.g(t))));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::catalog::{builtin_catalog, z12_mod_units};

    const Z2: &str = "hyperring z2 arity (2, 2)\nelements: 0 1\nzero: 0\none: 1\nneg: 0->0 1->1\n\
        f(0,0): {0}\nf(0,1): {1}\nf(1,1): {0}\ng(0,0): 0\ng(0,1): 0\ng(1,1): 1\n";

    fn err(text: &str) -> ParseError {
        parse_hyperring(text).unwrap_err()
    }

    #[test]
    fn parses_a_small_field() {
        let doc = parse_document(Z2).unwrap();
        assert_eq!(doc.ring.size(), 2);
        assert_eq!(doc.ring.unit(), Some(1));
        assert_eq!(doc.span_of('f', &[1, 0]), Some(Span { line: 7, column: 1, end_column: 11 }));
    }

    #[test]
    fn comments_and_spacing() {
        let text = Z2.replace("neg: 0->0 1->1", "neg: 0 -> 0   1->1  # involution").replace("g(1,1): 1", "g( 1 , 1 ) : 1");
        assert_eq!(parse_hyperring(&format!("# leading\n{text}")).unwrap(), parse_hyperring(Z2).unwrap());
    }

    #[test]
    fn round_trip_on_catalog() {
        for e in builtin_catalog() {
            let text = serialize_hyperring(&e.ring).unwrap();
            let back = parse_hyperring(&text).unwrap();
            assert_eq!(back.renamed(e.ring.name()), e.ring, "{}", e.name);
            assert_eq!(serialize_hyperring(&back).unwrap(), text);
        }
    }

    #[test]
    fn missing_neg_names_neg() {
        let e = err(&Z2.replace("neg: 0->0 1->1\n", ""));
        assert_eq!(e.kind, ParseErrorKind::Completeness);
        assert!(e.message.contains("neg"), "{e}");
        let e = err(&Z2.replace("1->1", ""));
        assert!(e.message.contains("neg") && e.message.contains("`1`"), "{e}");
    }

    #[test]
    fn duplicate_and_reordered_keys() {
        let h = z12_mod_units();
        let text = serialize_hyperring(&h).unwrap();
        let dup = text.replace("f(c2,c6): {c4}\n", "f(c2,c6): {c4}\nf(c2,c6): {c4}\n");
        let e = err(&dup);
        assert_eq!(e.kind, ParseErrorKind::Structural);
        assert!(e.message.contains("duplicate"), "{e}");
        let swapped = text.replace("f(c2,c6): {c4}\n", "f(c2,c6): {c4}\nf(c6,c2): {c4}\n");
        let e = err(&swapped);
        assert!(e.message.contains("duplicate") && e.message.contains("f(c2,c6)"), "{e}");
        let line = swapped.lines().position(|l| l.starts_with("f(c6,c2)")).unwrap() + 1;
        assert_eq!((e.line, e.column), (line, 1));
        let reordered = text.replace("f(c2,c6): {c4}\n", "f(c6,c2): {c4}\n");
        let e = err(&reordered);
        assert!(e.message.contains("non-canonical") && e.message.contains("f(c2,c6)"), "{e}");
    }

    #[test]
    fn positioned_diagnostics() {
        let e = err(&Z2.replace("g(0,1): 0", "g(0,7): 0"));
        assert_eq!((e.line, e.column, e.kind), (10, 5, ParseErrorKind::Structural));
        let e = err(&Z2.replace("f(1,1): {0}", "f(1,1): {0"));
        assert_eq!((e.line, e.kind), (8, ParseErrorKind::Lexical));
        let e = err(&Z2.replace("f(1,1): {0}\n", ""));
        assert_eq!(e.kind, ParseErrorKind::Completeness);
        assert!(e.message.contains("f(1,1)"));
        let e = err(&Z2.replace("f(0,1): {1}", "f(0,1): {}"));
        assert_eq!(e.line, 7);
        let e = err(&Z2.replace("g(0,1): 0", "g(0,1,1): 0"));
        assert!(e.message.contains("2 arguments"));
        let e = err("elements: a\n");
        assert!(e.message.contains("header"));
        let e = err(&Z2.replace("arity (2, 2)", "arity (1, 2)"));
        assert_eq!((e.line, e.column), (1, 21));
        let e = err(&Z2.replace("zero: 0\n", ""));
        assert!(e.message.contains("zero"));
    }

    #[test]
    fn unwritable_names_are_rejected() {
        let h = z12_mod_units();
        let mut shape_names = h.names().to_vec();
        shape_names[1] = "c,1".into();
        let bad = crate::ring::HyperRing::from_fns(
            RingShape {
                name: "x".into(),
                m: 2,
                n: 2,
                names: shape_names,
                zero: 0,
                unit: Some(1),
                neg: h.neg_map().to_vec(),
            },
            |t| h.f(t),
            |t| h.g(t),
        )
        .unwrap();
        assert_eq!(serialize_hyperring(&bad), Err(UnwritableName("c,1".into())));
    }
}
