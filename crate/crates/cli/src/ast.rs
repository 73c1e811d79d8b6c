//! Session syntax tree. Polynomial expressions are kept as source text and
//! parsed against their ring at evaluation time.

use std::fmt;

/// Source position; ignored by equality so printed sessions compare equal to parsed ones.
#[derive(Debug, Clone, Copy, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Pos) -> bool {
        true
    }
}

impl Eq for Pos {}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub text: String,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Session {
    pub stmts: Vec<Stmt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    Ring { name: String, def: RingDef, pos: Pos },
    Subring { name: String, def: SubringDef, vars: Option<Vec<String>>, pos: Pos },
    Ideal { name: String, expr: IdealExpr, pos: Pos },
    Elem { name: String, expr: Expr, pos: Pos },
    Check(Check),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingDef {
    Poly { p: u64, params: Vec<String>, vars: Vec<String> },
    Quotient { base: Box<RingDef>, relations: Vec<Expr> },
    Name(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubringDef {
    Veronese { ring: String, degree: u32 },
    Generators { ring: String, gens: Vec<Expr> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealExpr {
    Gens(Vec<Expr>),
    Name(String, Pos),
    Maximal,
    Sum(Box<IdealExpr>, Box<IdealExpr>),
    Product(Box<IdealExpr>, Box<IdealExpr>),
    Bracket(Box<IdealExpr>, u32),
    Colon(Box<IdealExpr>, Box<IdealExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arg {
    Ideal(IdealExpr),
    Elem(Expr),
    Ring(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Binding {
    Auto,
    Expr(Expr),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expect {
    Status(String),
    Value(i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub args: Vec<Arg>,
    pub bindings: Vec<(String, Binding)>,
    pub emax: Option<u32>,
    pub window: Option<usize>,
    pub probes: Option<Vec<Expr>>,
    pub expect: Option<Expect>,
    /// Ring in scope at the directive.
    pub ring: String,
    pub pos: Pos,
}

fn list<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl fmt::Display for RingDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDef::Poly { p, params, vars } if params.is_empty() => write!(f, "poly(F({p}), [{}])", list(vars)),
            RingDef::Poly { p, params, vars } => write!(f, "poly(F({p}, [{}]), [{}])", list(params), list(vars)),
            RingDef::Quotient { base, relations } => write!(f, "quotient({base}, [{}])", list(relations)),
            RingDef::Name(n) => f.write_str(n),
        }
    }
}

impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealExpr::Gens(g) => write!(f, "ideal({})", list(g)),
            IdealExpr::Name(n, _) => f.write_str(n),
            IdealExpr::Maximal => f.write_str("maximal"),
            IdealExpr::Sum(a, b) => write!(f, "({a} + {b})"),
            IdealExpr::Product(a, b) => write!(f, "({a} * {b})"),
            IdealExpr::Bracket(a, e) => write!(f, "bracket({a}, {e})"),
            IdealExpr::Colon(a, b) => write!(f, "colon({a}, {b})"),
        }
    }
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Ideal(i) => i.fmt(f),
            Arg::Elem(e) => e.fmt(f),
            Arg::Ring(r) => f.write_str(r),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "check {}({})", self.name, list(&self.args))?;
        for (k, b) in &self.bindings {
            match b {
                Binding::Auto => write!(f, " using {k}=auto")?,
                Binding::Expr(e) => write!(f, " using {k}={e}")?,
            }
        }
        if let Some(e) = self.emax {
            write!(f, " emax {e}")?;
        }
        if let Some(w) = self.window {
            write!(f, " window {w}")?;
        }
        if let Some(p) = &self.probes {
            write!(f, " probes [{}]", list(p))?;
        }
        match &self.expect {
            Some(Expect::Status(s)) => write!(f, " --expect {s}")?,
            Some(Expect::Value(v)) => write!(f, " --expect {v}")?,
            None => {}
        }
        f.write_str(";")
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Ring { name, def, .. } => write!(f, "ring {name} = {def};"),
            Stmt::Subring { name, def, vars, .. } => {
                match def {
                    SubringDef::Veronese { ring, degree } => write!(f, "subring {name} = veronese({ring}, {degree})")?,
                    SubringDef::Generators { ring, gens } => write!(f, "subring {name} = subring({ring}, [{}])", list(gens))?,
                }
                if let Some(v) = vars {
                    write!(f, " vars [{}]", list(v))?;
                }
                f.write_str(";")
            }
            Stmt::Ideal { name, expr, .. } => write!(f, "ideal {name} = {expr};"),
            Stmt::Elem { name, expr, .. } => write!(f, "elem {name} = {expr};"),
            Stmt::Check(c) => c.fmt(f),
        }
    }
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stmts {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
