//! Recursive-descent parser for sessions, with name and type checks.

use std::collections::HashMap;
use std::fmt;

use charp_core::scalar::is_prime;

use crate::ast::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    Name,
    Type,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DslError {
    pub kind: ErrorKind,
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ErrorKind::Syntax => "SyntaxError",
            ErrorKind::Name => "NameError",
            ErrorKind::Type => "TypeError",
        };
        write!(f, "{kind} at {}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for DslError {}

type PResult<T> = Result<T, DslError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Ideal,
    Elem,
    Ring,
}

/// Argument kinds of each check.
pub fn signature(check: &str) -> Option<&'static [Kind]> {
    use Kind::*;
    Some(match check {
        "member" | "frobenius_member" | "tight_member" | "special_member" => &[Elem, Ideal],
        "ideal_equal" | "product_identity" => &[Ideal, Ideal],
        "congruent" => &[Elem, Elem],
        "dim" | "jacobian" => &[Ring],
        "is_sop" | "is_regular" | "is_filter_regular" | "is_m_primary" | "frobenius_closure" | "frobenius_closed"
        | "bracket_commute" | "briancon_skoda" | "colon_socle" => &[Ideal],
        _ => return None,
    })
}

pub const STATUSES: [&str; 7] = ["IN", "OUT", "UNKNOWN", "PASS", "FAIL", "ERROR", "RESOURCE_LIMIT"];
const OPTION_WORDS: [&str; 4] = ["using", "emax", "window", "probes"];

#[derive(Debug, Clone)]
struct Scope {
    names: Vec<String>,
    default_t_names: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Decl {
    Ring,
    Ideal,
    Elem,
}

struct Parser {
    src: Vec<char>,
    i: usize,
    line: usize,
    col: usize,
    scopes: HashMap<String, Scope>,
    decls: HashMap<String, (Decl, String)>,
    current: Option<String>,
}

pub fn parse_session(text: &str) -> PResult<Session> {
    let mut p = Parser {
        src: text.chars().collect(),
        i: 0,
        line: 1,
        col: 1,
        scopes: HashMap::new(),
        decls: HashMap::new(),
        current: None,
    };
    let mut stmts = Vec::new();
    loop {
        p.skip_ws();
        if p.at_end() {
            break;
        }
        stmts.push(p.stmt()?);
    }
    Ok(Session { stmts })
}

impl Parser {
    fn pos(&self) -> Pos {
        Pos { line: self.line, col: self.col }
    }

    fn err<T>(&self, kind: ErrorKind, pos: Pos, msg: impl Into<String>) -> PResult<T> {
        Err(DslError { kind, line: pos.line, col: pos.col, msg: msg.into() })
    }

    fn at_end(&self) -> bool {
        self.i >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.src.get(self.i).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.i += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' || (c == '/' && self.src.get(self.i + 1) == Some(&'/')) {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn looking_at(&self, s: &str) -> bool {
        s.chars().enumerate().all(|(k, c)| self.src.get(self.i + k) == Some(&c))
    }

    fn looking_at_word(&self, w: &str) -> bool {
        self.looking_at(w) && !self.src.get(self.i + w.len()).is_some_and(|c| c.is_alphanumeric() || *c == '_')
    }

    fn expect_char(&mut self, c: char) -> PResult<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |f| format!("'{f}'"));
            self.err(ErrorKind::Syntax, self.pos(), format!("expected '{c}', found {found}"))
        }
    }

    fn eat_char(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> PResult<(String, Pos)> {
        self.skip_ws();
        let pos = self.pos();
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                if s.is_empty() && c.is_ascii_digit() {
                    break;
                }
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if s.is_empty() {
            return self.err(ErrorKind::Syntax, pos, "expected identifier");
        }
        Ok((s, pos))
    }

    fn int(&mut self) -> PResult<(i64, Pos)> {
        self.skip_ws();
        let pos = self.pos();
        let neg = self.peek() == Some('-');
        if neg {
            self.bump();
        }
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            s.push(c);
            self.bump();
        }
        match s.parse::<i64>() {
            Ok(v) => Ok((if neg { -v } else { v }, pos)),
            Err(_) => self.err(ErrorKind::Syntax, pos, "expected integer"),
        }
    }

    fn nat(&mut self) -> PResult<(u64, Pos)> {
        let (v, pos) = self.int()?;
        u64::try_from(v).map(|v| (v, pos)).or_else(|_| self.err(ErrorKind::Syntax, pos, "expected a natural number"))
    }

    fn ident_list(&mut self) -> PResult<Vec<String>> {
        self.expect_char('[')?;
        let mut out = Vec::new();
        if self.eat_char(']') {
            return Ok(out);
        }
        loop {
            let (id, pos) = self.ident()?;
            if out.contains(&id) {
                return self.err(ErrorKind::Name, pos, format!("duplicate name '{id}'"));
            }
            out.push(id);
            if self.eat_char(']') {
                return Ok(out);
            }
            self.expect_char(',')?;
        }
    }

    fn declare(&mut self, name: &str, pos: Pos, decl: Decl, ring: String) -> PResult<()> {
        if self.decls.contains_key(name) {
            return self.err(ErrorKind::Name, pos, format!("'{name}' is already declared"));
        }
        self.decls.insert(name.to_string(), (decl, ring));
        Ok(())
    }

    fn current_ring(&self, pos: Pos) -> PResult<String> {
        match &self.current {
            Some(r) => Ok(r.clone()),
            None => self.err(ErrorKind::Name, pos, "no ring declared yet"),
        }
    }

    fn stmt(&mut self) -> PResult<Stmt> {
        let (kw, pos) = self.ident()?;
        match kw.as_str() {
            "ring" => self.ring_stmt(pos),
            "subring" => self.subring_stmt(pos),
            "ideal" => {
                let (name, npos) = self.ident()?;
                let ring = self.current_ring(pos)?;
                self.expect_char('=')?;
                let expr = self.ideal_expr(&ring)?;
                self.expect_char(';')?;
                self.declare(&name, npos, Decl::Ideal, ring)?;
                Ok(Stmt::Ideal { name, expr, pos })
            }
            "elem" => {
                let (name, npos) = self.ident()?;
                let ring = self.current_ring(pos)?;
                self.expect_char('=')?;
                let expr = self.expr(&ring, false)?;
                self.expect_char(';')?;
                self.declare(&name, npos, Decl::Elem, ring)?;
                Ok(Stmt::Elem { name, expr, pos })
            }
            "check" => self.check_stmt(pos),
            other => self.err(ErrorKind::Syntax, pos, format!("unknown statement '{other}'")),
        }
    }

    fn ring_stmt(&mut self, pos: Pos) -> PResult<Stmt> {
        let (name, npos) = self.ident()?;
        self.expect_char('=')?;
        let (def, scope) = self.ring_def()?;
        self.expect_char(';')?;
        self.declare(&name, npos, Decl::Ring, name.clone())?;
        self.scopes.insert(name.clone(), scope);
        self.current = Some(name.clone());
        Ok(Stmt::Ring { name, def, pos })
    }

    fn ring_def(&mut self) -> PResult<(RingDef, Scope)> {
        let (w, pos) = self.ident()?;
        match w.as_str() {
            "poly" => {
                self.expect_char('(')?;
                let (f, fpos) = self.ident()?;
                if f != "F" {
                    return self.err(ErrorKind::Syntax, fpos, "expected field F(p) or F(p, [params])");
                }
                self.expect_char('(')?;
                let (p, ppos) = self.nat()?;
                if !is_prime(p) {
                    return self.err(ErrorKind::Syntax, ppos, format!("characteristic must be prime, got {p}"));
                }
                let params = if self.eat_char(',') { self.ident_list()? } else { Vec::new() };
                self.expect_char(')')?;
                self.expect_char(',')?;
                let vpos = {
                    self.skip_ws();
                    self.pos()
                };
                let vars = self.ident_list()?;
                if vars.is_empty() {
                    return self.err(ErrorKind::Syntax, vpos, "a ring needs at least one variable");
                }
                if let Some(v) = vars.iter().find(|v| params.contains(v)) {
                    return self.err(ErrorKind::Name, vpos, format!("'{v}' is both a parameter and a variable"));
                }
                self.expect_char(')')?;
                let mut names = params.clone();
                names.extend(vars.iter().cloned());
                Ok((RingDef::Poly { p, params, vars }, Scope { names, default_t_names: false }))
            }
            "quotient" => {
                self.expect_char('(')?;
                let (base, scope) = self.ring_def()?;
                self.expect_char(',')?;
                self.expect_char('[')?;
                let mut relations = Vec::new();
                if !self.eat_char(']') {
                    loop {
                        relations.push(self.expr_in_scope(&scope, false)?);
                        if self.eat_char(']') {
                            break;
                        }
                        self.expect_char(',')?;
                    }
                }
                self.expect_char(')')?;
                Ok((RingDef::Quotient { base: Box::new(base), relations }, scope))
            }
            name => match self.decls.get(name) {
                Some((Decl::Ring, _)) => Ok((RingDef::Name(name.to_string()), self.scopes[name].clone())),
                Some(_) => self.err(ErrorKind::Type, pos, format!("'{name}' is not a ring")),
                None => self.err(ErrorKind::Name, pos, format!("undefined ring '{name}'")),
            },
        }
    }

    fn ring_name(&mut self) -> PResult<String> {
        let (name, pos) = self.ident()?;
        match self.decls.get(&name) {
            Some((Decl::Ring, _)) => Ok(name),
            Some(_) => self.err(ErrorKind::Type, pos, format!("'{name}' is not a ring")),
            None => self.err(ErrorKind::Name, pos, format!("undefined ring '{name}'")),
        }
    }

    fn subring_stmt(&mut self, pos: Pos) -> PResult<Stmt> {
        let (name, npos) = self.ident()?;
        self.expect_char('=')?;
        let (kind, kpos) = self.ident()?;
        self.expect_char('(')?;
        let ring = self.ring_name()?;
        self.expect_char(',')?;
        let def = match kind.as_str() {
            "veronese" => {
                let (d, dpos) = self.nat()?;
                if d == 0 {
                    return self.err(ErrorKind::Syntax, dpos, "Veronese degree must be positive");
                }
                SubringDef::Veronese { ring: ring.clone(), degree: d as u32 }
            }
            "subring" => {
                let scope = self.scopes[&ring].clone();
                self.expect_char('[')?;
                let mut gens = Vec::new();
                loop {
                    gens.push(self.expr_in_scope(&scope, false)?);
                    if self.eat_char(']') {
                        break;
                    }
                    self.expect_char(',')?;
                }
                SubringDef::Generators { ring: ring.clone(), gens }
            }
            other => return self.err(ErrorKind::Syntax, kpos, format!("expected veronese or subring, found '{other}'")),
        };
        self.expect_char(')')?;
        self.skip_ws();
        let vars = if self.looking_at_word("vars") {
            self.ident()?;
            let vpos = self.pos();
            let vs = self.ident_list()?;
            if let Some(v) = vs.iter().find(|v| self.scopes[&ring].names.contains(v)) {
                return self.err(ErrorKind::Name, vpos, format!("'{v}' clashes with a name of {ring}"));
            }
            if let SubringDef::Generators { gens, .. } = &def {
                if gens.len() != vs.len() {
                    return self.err(ErrorKind::Type, vpos, format!("{} names for {} generators", vs.len(), gens.len()));
                }
            }
            Some(vs)
        } else {
            None
        };
        self.expect_char(';')?;
        let mut names = self.scopes[&ring].names.clone();
        names.extend(vars.iter().flatten().cloned());
        self.declare(&name, npos, Decl::Ring, name.clone())?;
        self.scopes.insert(name.clone(), Scope { names, default_t_names: vars.is_none() });
        self.current = Some(name.clone());
        Ok(Stmt::Subring { name, def, vars, pos })
    }

    fn ideal_expr(&mut self, ring: &str) -> PResult<IdealExpr> {
        let mut acc = self.ideal_term(ring)?;
        while self.eat_char('+') {
            acc = IdealExpr::Sum(Box::new(acc), Box::new(self.ideal_term(ring)?));
        }
        Ok(acc)
    }

    fn ideal_term(&mut self, ring: &str) -> PResult<IdealExpr> {
        let mut acc = self.ideal_atom(ring)?;
        while self.eat_char('*') {
            acc = IdealExpr::Product(Box::new(acc), Box::new(self.ideal_atom(ring)?));
        }
        Ok(acc)
    }

    fn ideal_atom(&mut self, ring: &str) -> PResult<IdealExpr> {
        if self.eat_char('(') {
            let inner = self.ideal_expr(ring)?;
            self.expect_char(')')?;
            return Ok(inner);
        }
        let (w, pos) = self.ident()?;
        match w.as_str() {
            "ideal" => {
                self.expect_char('(')?;
                let mut gens = Vec::new();
                if !self.eat_char(')') {
                    loop {
                        gens.push(self.expr(ring, false)?);
                        if self.eat_char(')') {
                            break;
                        }
                        self.expect_char(',')?;
                    }
                }
                Ok(IdealExpr::Gens(gens))
            }
            "maximal" => Ok(IdealExpr::Maximal),
            "bracket" => {
                self.expect_char('(')?;
                let inner = self.ideal_expr(ring)?;
                self.expect_char(',')?;
                let (e, _) = self.nat()?;
                self.expect_char(')')?;
                Ok(IdealExpr::Bracket(Box::new(inner), e as u32))
            }
            "colon" => {
                self.expect_char('(')?;
                let a = self.ideal_expr(ring)?;
                self.expect_char(',')?;
                let b = self.ideal_expr(ring)?;
                self.expect_char(')')?;
                Ok(IdealExpr::Colon(Box::new(a), Box::new(b)))
            }
            name => match self.decls.get(name) {
                Some((Decl::Ideal, r)) if r == ring => Ok(IdealExpr::Name(name.to_string(), pos)),
                Some((Decl::Ideal, r)) => self.err(ErrorKind::Type, pos, format!("ideal '{name}' lives in {r}, not {ring}")),
                Some(_) => self.err(ErrorKind::Type, pos, format!("'{name}' is not an ideal")),
                None => self.err(ErrorKind::Name, pos, format!("undefined ideal '{name}'")),
            },
        }
    }

    fn expr(&mut self, ring: &str, allow_elem_name: bool) -> PResult<Expr> {
        let scope = self.scopes[ring].clone();
        let e = self.expr_in_scope(&scope, true)?;
        if let Some((Decl::Elem, r)) = self.decls.get(e.text.as_str()) {
            if !allow_elem_name {
                return self.err(ErrorKind::Type, e.pos, format!("element '{}' cannot be used inside a declaration", e.text));
            }
            if r != ring {
                return self.err(ErrorKind::Type, e.pos, format!("element '{}' lives in {r}, not {ring}", e.text));
            }
        }
        Ok(e)
    }

    /// Captures expression text up to a top-level delimiter and checks its identifiers.
    fn expr_in_scope(&mut self, scope: &Scope, elem_names_ok: bool) -> PResult<Expr> {
        self.skip_ws();
        let pos = self.pos();
        let start = self.i;
        let mut depth = 0i32;
        let mut idents: Vec<(String, Pos)> = Vec::new();
        while let Some(c) = self.peek() {
            if depth == 0 && matches!(c, ',' | ';' | ')' | ']') {
                break;
            }
            if depth == 0
                && self.i > start
                && self.src[self.i - 1].is_whitespace()
                && (OPTION_WORDS.iter().any(|w| self.looking_at_word(w)) || self.looking_at("--expect"))
            {
                break;
            }
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                _ => {}
            }
            if c.is_ascii_alphabetic() || c == '_' {
                let ipos = self.pos();
                let mut s = String::new();
                while let Some(c) = self.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '_') {
                    s.push(c);
                    self.bump();
                }
                idents.push((s, ipos));
                continue;
            }
            if !(c.is_ascii_digit() || c.is_whitespace() || "+-*/^()[]".contains(c)) {
                return self.err(ErrorKind::Syntax, self.pos(), format!("unexpected character '{c}' in expression"));
            }
            self.bump();
        }
        let text: String = self.src[start..self.i].iter().collect::<String>().trim().to_string();
        if text.is_empty() {
            return self.err(ErrorKind::Syntax, pos, "expected expression");
        }
        if depth != 0 {
            return self.err(ErrorKind::Syntax, pos, "unbalanced parentheses in expression");
        }
        let lone_elem = elem_names_ok && idents.len() == 1 && idents[0].0 == text && self.decls.get(&text).is_some_and(|d| d.0 == Decl::Elem);
        if !lone_elem {
            for (id, ipos) in idents {
                let t_name = scope.default_t_names && id.len() > 1 && id.starts_with('t') && id[1..].chars().all(|c| c.is_ascii_digit());
                if !scope.names.contains(&id) && !t_name {
                    return self.err(ErrorKind::Name, ipos, format!("unknown identifier '{id}'"));
                }
            }
        }
        Ok(Expr { text, pos })
    }

    fn check_stmt(&mut self, pos: Pos) -> PResult<Stmt> {
        let (name, npos) = self.ident()?;
        let Some(sig) = signature(&name) else {
            return self.err(ErrorKind::Name, npos, format!("unknown check '{name}'"));
        };
        let ring = self.current_ring(pos)?;
        self.expect_char('(')?;
        let mut args = Vec::new();
        let mut arg_ring = ring.clone();
        for (k, kind) in sig.iter().enumerate() {
            if k > 0 {
                self.expect_char(',')?;
            }
            let arg = match kind {
                Kind::Ring => Arg::Ring(self.ring_name()?),
                Kind::Ideal => Arg::Ideal(self.ideal_expr(&arg_ring)?),
                Kind::Elem => Arg::Elem(self.expr(&arg_ring, true)?),
            };
            if let Arg::Ideal(IdealExpr::Name(n, _)) = &arg {
                arg_ring = self.decls[n].1.clone();
            }
            args.push(arg);
        }
        if !self.eat_char(')') {
            return self.err(ErrorKind::Type, self.pos(), format!("check '{name}' takes {} argument(s)", sig.len()));
        }
        let mut check = Check { name, args, bindings: Vec::new(), emax: None, window: None, probes: None, expect: None, ring, pos };
        loop {
            if self.eat_char(';') {
                break;
            }
            if self.looking_at("--expect") {
                for _ in 0.."--expect".len() {
                    self.bump();
                }
                self.skip_ws();
                check.expect = Some(if self.peek().is_some_and(|c| c.is_ascii_digit() || c == '-') {
                    Expect::Value(self.int()?.0)
                } else {
                    let (s, spos) = self.ident()?;
                    if !STATUSES.contains(&s.as_str()) {
                        return self.err(ErrorKind::Syntax, spos, format!("unknown status '{s}'"));
                    }
                    Expect::Status(s)
                });
                continue;
            }
            let (w, wpos) = self.ident()?;
            match w.as_str() {
                "using" => {
                    let (key, kpos) = self.ident()?;
                    if key != "c" && key != "test" {
                        return self.err(ErrorKind::Syntax, kpos, format!("unknown binding '{key}', expected c or test"));
                    }
                    if !check.bindings.is_empty() {
                        return self.err(ErrorKind::Syntax, kpos, "only one multiplier binding is allowed");
                    }
                    self.expect_char('=')?;
                    self.skip_ws();
                    let b = if self.looking_at_word("auto") {
                        self.ident()?;
                        Binding::Auto
                    } else {
                        Binding::Expr(self.expr(&check.ring, true)?)
                    };
                    check.bindings.push((key, b));
                }
                "emax" => check.emax = Some(self.nat()?.0 as u32),
                "window" => check.window = Some(self.nat()?.0 as usize),
                "probes" => {
                    self.expect_char('[')?;
                    let mut ps = Vec::new();
                    if !self.eat_char(']') {
                        loop {
                            ps.push(self.expr(&check.ring, true)?);
                            if self.eat_char(']') {
                                break;
                            }
                            self.expect_char(',')?;
                        }
                    }
                    check.probes = Some(ps);
                }
                other => return self.err(ErrorKind::Syntax, wpos, format!("unknown option '{other}'")),
            }
        }
        Ok(Stmt::Check(check))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypersurface_session_has_three_nodes() {
        let s = parse_session("ring R = quotient(poly(F(2),[x,y,z]),[x^2+y^3+z^5]); ideal q = ideal(y,z); check frobenius_closed(q);").unwrap();
        assert_eq!(s.stmts.len(), 3);
    }

    #[test]
    fn undefined_names_are_reported_with_positions() {
        let e = parse_session("ring R = poly(F(2),[x]);\ncheck frobenius_closed(q);").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Name);
        assert_eq!((e.line, e.col), (2, 24));
        let e = parse_session("ring R = poly(F(2),[x]); elem f = x + w;").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Name);
        assert_eq!(e.col, 39);
    }

    #[test]
    fn non_prime_characteristic_is_a_syntax_error() {
        let e = parse_session("ring R = poly(F(4),[x]);").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Syntax);
        assert!(e.msg.contains("characteristic must be prime"));
    }

    #[test]
    fn type_errors() {
        let e = parse_session("ring R = poly(F(2),[x]); elem f = x; check frobenius_closed(f);").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Type);
        let e = parse_session("ring R = poly(F(2),[x]); ideal q = ideal(x); check dim(q);").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Type);
    }

    #[test]
    fn options_are_parsed() {
        let s = parse_session(
            "ring R = poly(F(2,[u]),[x,y]); ideal q = ideal(x + u*y); check tight_member(x^2 + y, q) using c=x + y emax 3 window 1 probes [x, y^2] --expect UNKNOWN;",
        )
        .unwrap();
        let Stmt::Check(c) = &s.stmts[2] else { panic!() };
        assert_eq!(c.bindings[0].0, "c");
        assert!(matches!(&c.bindings[0].1, Binding::Expr(e) if e.text == "x + y"));
        assert_eq!(c.emax, Some(3));
        assert_eq!(c.window, Some(1));
        assert_eq!(c.probes.as_ref().unwrap().len(), 2);
        assert_eq!(c.expect, Some(Expect::Status("UNKNOWN".into())));
        assert!(matches!(&c.args[0], Arg::Elem(e) if e.text == "x^2 + y"));
    }

    #[test]
    fn round_trip() {
        let text = "ring S = quotient(poly(F(2, [u, v]), [x, y, z]), [x^2+u*y^2+v*z^2]);\n\
                    subring T = veronese(S, 2) vars [a, b, c, d, e];\n\
                    ideal q1 = ideal(x^2, y^2);\n\
                    ideal q2 = ideal(x*y, z^2);\n\
                    elem w = y*z^3;\n\
                    check frobenius_closed(q1 * q2) emax 1 probes [w] --expect OUT;\n\
                    check dim(T) --expect 2;\n";
        let s = parse_session(text).unwrap();
        let printed = s.to_string();
        assert_eq!(parse_session(&printed).unwrap(), s);
    }

    #[test]
    fn empty_session() {
        assert!(parse_session("  # nothing\n").unwrap().stmts.is_empty());
    }
}
