//! Input format.
//!
//! ```text
//! # comment
//! ring Q[x, y];
//! center (x^2, x*y);
//! cutoff 6;          # optional, default 6
//! weight -1..2;      # optional
//! hdeg 0..2;         # optional
//! pullback (y - x^2); # optional, for check-excessive
//! ```

use std::collections::HashSet;
use std::fmt;
use std::ops::RangeInclusive;

use dnc_core::center::CenterPresentation;
use dnc_core::polycore::{parse_polynomial, ExprError, Polynomial, Ring};

pub const DEFAULT_CUTOFF: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemSpec {
    pub vars: Vec<String>,
    /// Generator strings as written.
    pub center: Vec<String>,
    pub cutoff: u32,
    pub weights: Option<(i64, i64)>,
    pub hdegs: Option<(u32, u32)>,
    /// Relations g′ cutting out the base-changed ambient.
    pub pullback: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: unknown variable `{name}`")]
    UnknownVariable { line: usize, col: usize, name: String },
    #[error("{line}:{col}: duplicate variable `{name}`")]
    DuplicateVariable { line: usize, col: usize, name: String },
}

impl ParseError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            ParseError::Syntax { line, col, .. }
            | ParseError::UnknownVariable { line, col, .. }
            | ParseError::DuplicateVariable { line, col, .. } => (*line, *col),
        }
    }
}

impl ProblemSpec {
    pub fn new(vars: &[&str], center: &[&str]) -> Self {
        ProblemSpec {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            center: center.iter().map(|s| s.to_string()).collect(),
            cutoff: DEFAULT_CUTOFF,
            weights: None,
            hdegs: None,
            pullback: Vec::new(),
        }
    }

    pub fn ring(&self) -> Ring {
        Ring::new(&self.vars)
    }

    pub fn center_presentation(&self) -> CenterPresentation {
        let ring = self.ring();
        let gens = self.center.iter().map(|g| parse_polynomial(g, &ring).expect("validated")).collect();
        CenterPresentation::new(&ring, gens).expect("validated")
    }

    pub fn pullback_relations(&self) -> Vec<Polynomial> {
        let ring = self.ring();
        self.pullback.iter().map(|g| parse_polynomial(g, &ring).expect("validated")).collect()
    }

    pub fn weight_range(&self, default: RangeInclusive<i64>) -> RangeInclusive<i64> {
        self.weights.map_or(default, |(a, b)| a..=b)
    }

    pub fn hdeg_range(&self, default: RangeInclusive<u32>) -> RangeInclusive<u32> {
        self.hdegs.map_or(default, |(a, b)| a..=b)
    }
}

impl fmt::Display for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring Q[{}];", self.vars.join(", "))?;
        writeln!(f, "center ({});", self.center.join(", "))?;
        writeln!(f, "cutoff {};", self.cutoff)?;
        if let Some((a, b)) = self.weights {
            writeln!(f, "weight {a}..{b};")?;
        }
        if let Some((a, b)) = self.hdegs {
            writeln!(f, "hdeg {a}..{b};")?;
        }
        if !self.pullback.is_empty() {
            writeln!(f, "pullback ({});", self.pullback.join(", "))?;
        }
        Ok(())
    }
}

pub fn print_problem(spec: &ProblemSpec) -> String {
    spec.to_string()
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn loc(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, col)
    }

    fn err_at(&self, pos: usize, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.loc(pos);
        ParseError::Syntax { line, col, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        loop {
            let rest = &self.src[self.pos..];
            let trimmed = rest.trim_start();
            self.pos += rest.len() - trimmed.len();
            if trimmed.starts_with('#') {
                self.pos += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                break;
            }
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(got) => Err(self.err_at(self.pos, format!("expected `{c}`, found `{got}`"))),
            None => Err(self.err_at(self.pos, format!("expected `{c}`, found end of input"))),
        }
    }

    fn ident(&mut self) -> Result<(usize, &'a str), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let mut len = 0;
        for (i, c) in rest.char_indices() {
            let ok = if i == 0 { c.is_ascii_alphabetic() || c == '_' } else { c.is_ascii_alphanumeric() || c == '_' };
            if !ok {
                break;
            }
            len = i + c.len_utf8();
        }
        if len == 0 {
            return Err(self.err_at(start, "expected an identifier"));
        }
        self.pos += len;
        Ok((start, &rest[..len]))
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .char_indices()
            .take_while(|&(i, c)| c.is_ascii_digit() || (i == 0 && c == '-'))
            .count();
        let v = rest[..len].parse().map_err(|_| self.err_at(start, "expected an integer"))?;
        self.pos += len;
        Ok(v)
    }

    fn range(&mut self) -> Result<(i64, i64), ParseError> {
        let start = self.pos;
        let a = self.integer()?;
        self.expect('.')?;
        self.expect('.')?;
        let b = self.integer()?;
        if a > b {
            return Err(self.err_at(start, format!("empty range {a}..{b}")));
        }
        Ok((a, b))
    }

    /// Comma-separated expressions inside `( )`, split at depth 0.
    fn expr_list(&mut self) -> Result<Vec<(usize, &'a str)>, ParseError> {
        self.expect('(')?;
        let mut out = Vec::new();
        let mut depth = 0usize;
        let mut start = self.pos;
        let bytes = self.src.as_bytes();
        loop {
            let Some(&b) = bytes.get(self.pos) else {
                return Err(self.err_at(self.pos, "unclosed `(`"));
            };
            match b {
                b'(' => depth += 1,
                b')' if depth > 0 => depth -= 1,
                b',' | b')' if depth == 0 => {
                    let piece = &self.src[start..self.pos];
                    let lead = piece.len() - piece.trim_start().len();
                    let text = piece.trim();
                    if text.is_empty() {
                        if b == b')' && out.is_empty() {
                            self.pos += 1;
                            return Ok(out);
                        }
                        return Err(self.err_at(self.pos, "empty expression"));
                    }
                    out.push((start + lead, text));
                    self.pos += 1;
                    if b == b')' {
                        return Ok(out);
                    }
                    start = self.pos;
                }
                b';' if depth == 0 => return Err(self.err_at(self.pos, "expected `)`")),
                _ => {}
            }
            self.pos += 1;
        }
    }
}

fn poly_error(lx: &Lexer, start: usize, e: ExprError) -> ParseError {
    let (line, col) = lx.loc(start + e.offset());
    match e {
        ExprError::UnknownVariable { name, .. } => ParseError::UnknownVariable { line, col, name },
        ExprError::Syntax { msg, .. } => ParseError::Syntax { line, col, msg },
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemSpec, ParseError> {
    let mut lx = Lexer { src: text, pos: 0 };
    let mut vars: Option<Vec<String>> = None;
    let mut center = None;
    let mut cutoff = None;
    let mut weights = None;
    let mut hdegs = None;
    let mut pullback = None;
    let mut seen = HashSet::new();

    while !lx.at_end() {
        let (kpos, kw) = lx.ident()?;
        if !seen.insert(kw) {
            return Err(lx.err_at(kpos, format!("`{kw}` given twice")));
        }
        if kw != "ring" && vars.is_none() {
            return Err(lx.err_at(kpos, "`ring` must come first"));
        }
        match kw {
            "ring" => {
                let (qpos, q) = lx.ident()?;
                if q != "Q" {
                    return Err(lx.err_at(qpos, format!("only Q is supported, found `{q}`")));
                }
                lx.expect('[')?;
                let mut names: Vec<String> = Vec::new();
                if lx.peek() != Some(']') {
                    loop {
                        let (p, name) = lx.ident()?;
                        if names.iter().any(|n| n == name) {
                            let (line, col) = lx.loc(p);
                            return Err(ParseError::DuplicateVariable { line, col, name: name.to_string() });
                        }
                        names.push(name.to_string());
                        if lx.peek() == Some(',') {
                            lx.expect(',')?;
                        } else {
                            break;
                        }
                    }
                }
                lx.expect(']')?;
                vars = Some(names);
            }
            "center" | "pullback" => {
                let ring = Ring::new(vars.as_deref().unwrap_or_default());
                let mut polys = Vec::new();
                for (start, text) in lx.expr_list()? {
                    parse_polynomial(text, &ring).map_err(|e| poly_error(&lx, start, e))?;
                    polys.push(text.to_string());
                }
                if kw == "center" {
                    center = Some(polys);
                } else {
                    pullback = Some(polys);
                }
            }
            "cutoff" => {
                let p = lx.pos;
                let v = lx.integer()?;
                cutoff = Some(u32::try_from(v).map_err(|_| lx.err_at(p, "cutoff must be nonnegative"))?);
            }
            "weight" => weights = Some(lx.range()?),
            "hdeg" => {
                let p = lx.pos;
                let (a, b) = lx.range()?;
                let conv = |v: i64| u32::try_from(v).map_err(|_| lx.err_at(p, "hdeg must be nonnegative"));
                hdegs = Some((conv(a)?, conv(b)?));
            }
            other => return Err(lx.err_at(kpos, format!("unknown statement `{other}`"))),
        }
        lx.expect(';')?;
    }
    let Some(vars) = vars else {
        return Err(lx.err_at(lx.pos, "missing `ring` statement"));
    };
    let Some(center) = center else {
        return Err(lx.err_at(lx.pos, "missing `center` statement"));
    };
    Ok(ProblemSpec {
        vars,
        center,
        cutoff: cutoff.unwrap_or(DEFAULT_CUTOFF),
        weights,
        hdegs,
        pullback: pullback.unwrap_or_default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_suite_inputs() {
        let s = parse_problem("ring Q[x,y]; center (x^2, x*y);").unwrap();
        assert_eq!(s, ProblemSpec::new(&["x", "y"], &["x^2", "x*y"]));
        let s = parse_problem("ring Q[u]; center (u); cutoff 8;").unwrap();
        assert_eq!(s.cutoff, 8);
        let s = parse_problem("ring Q[x];\ncenter (x, x);").unwrap();
        assert_eq!(s.center, vec!["x", "x"]);
        let s = parse_problem("ring Q[z]; center ();").unwrap();
        assert!(s.center.is_empty());
    }

    #[test]
    fn reports_positions() {
        let e = parse_problem("ring Q[x,y];\ncenter (x, w^2);").unwrap_err();
        assert_eq!(e, ParseError::UnknownVariable { line: 2, col: 12, name: "w".into() });
        let e = parse_problem("ring Q[x, y, x]; center (x);").unwrap_err();
        assert_eq!(e, ParseError::DuplicateVariable { line: 1, col: 14, name: "x".into() });
        let e = parse_problem("ring Q[x]\ncenter (x);").unwrap_err();
        assert_eq!(e.position(), (2, 1));
        assert!(parse_problem("ring Q[x]; center (x,);").is_err());
        assert!(parse_problem("center (x); ring Q[x];").is_err());
        assert!(parse_problem("ring Q[x];").is_err());
    }

    #[test]
    fn print_round_trips() {
        let mut s = ProblemSpec::new(&["x", "y"], &["(x + 1)^2", "3/2*x*y"]);
        s.weights = Some((-1, 2));
        s.hdegs = Some((0, 1));
        s.pullback = vec!["y - x^2".into()];
        assert_eq!(parse_problem(&print_problem(&s)).unwrap(), s);
    }
}
