//! Recursive-descent parser for `.solv` scripts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::ast::*;
use super::lexer::{lex, Tok, Token};
use super::ScriptError;

/// Words that end an expression instead of being read as a generator.
const RESERVED: &[&str] = &[
    "in", "mod", "keep", "over", "rank", "order", "field", "gens",
];

/// Parses a whole script.
pub fn parse(src: &str) -> Result<Vec<Stmt>, ScriptError> {
    let tokens = lex(src)?;
    let mut p = Parser { tokens, at: 0 };
    let mut out = Vec::new();
    loop {
        p.skip_separators();
        if p.at >= p.tokens.len() {
            return Ok(out);
        }
        out.push(p.statement()?);
        p.end_of_statement()?;
    }
}

/// Whether the text has balanced brackets, i.e. a REPL may stop reading.
pub fn is_complete(src: &str) -> bool {
    let mut depth = 0i32;
    for line in src.lines() {
        let line = line.split('#').next().unwrap_or("");
        for c in line.chars() {
            match c {
                '(' | '[' | '{' => depth += 1,
                ')' | ']' | '}' => depth -= 1,
                _ => {}
            }
        }
    }
    depth <= 0
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at.min(self.tokens.len() - 1)]
    }

    fn peek_at(&self, k: usize) -> Option<&Token> {
        self.tokens.get(self.at + k)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ScriptError> {
        Err(ScriptError::new(self.peek().pos, msg))
    }

    fn skip_separators(&mut self) {
        while self.at < self.tokens.len() && matches!(self.peek().tok, Tok::Newline | Tok::Sym(';'))
        {
            self.at += 1;
        }
    }

    fn end_of_statement(&mut self) -> Result<(), ScriptError> {
        match self.peek().tok {
            Tok::Newline | Tok::Sym(';') => Ok(()),
            _ => self.error(format!("unexpected {}", describe(&self.peek().tok))),
        }
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == w)
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ScriptError> {
        if self.is_sym(c) {
            self.at += 1;
            Ok(())
        } else {
            self.error(format!(
                "expected '{c}', found {}",
                describe(&self.peek().tok)
            ))
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<(), ScriptError> {
        if self.is_word(w) {
            self.at += 1;
            Ok(())
        } else {
            self.error(format!(
                "expected '{w}', found {}",
                describe(&self.peek().tok)
            ))
        }
    }

    fn ident(&mut self) -> Result<Ident, ScriptError> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let id = Ident {
                    name: s.clone(),
                    pos: self.peek().pos,
                };
                self.at += 1;
                Ok(id)
            }
            t => self.error(format!("expected a name, found {}", describe(t))),
        }
    }

    fn int(&mut self) -> Result<BigInt, ScriptError> {
        match &self.peek().tok {
            Tok::Int(n) => {
                let n = n.clone();
                self.at += 1;
                Ok(n)
            }
            t => self.error(format!("expected an integer, found {}", describe(t))),
        }
    }

    fn small_int(&mut self) -> Result<u64, ScriptError> {
        let pos = self.peek().pos;
        let n = self.int()?;
        n.to_u64()
            .ok_or_else(|| ScriptError::new(pos, format!("integer {n} is too large")))
    }

    fn statement(&mut self) -> Result<Stmt, ScriptError> {
        let pos = self.peek().pos;
        let head = self.ident()?;
        let kind = match head.name.as_str() {
            "algebra" => self.algebra()?,
            "rel" => {
                let hi = self.ident()?;
                self.expect_sym('*')?;
                let lo = self.ident()?;
                self.expect_sym('=')?;
                let rhs = self.expr()?;
                StmtKind::Rel { hi, lo, rhs }
            }
            "use" => StmtKind::Use(self.ident()?),
            "ideal" => {
                let name = self.ident()?;
                self.expect_sym('=')?;
                let gens = self.list(|p| p.expr())?;
                StmtKind::Ideal { name, gens }
            }
            "module" => {
                let name = self.ident()?;
                self.expect_word("rank")?;
                let rank = self.small_int()? as usize;
                let order = if self.is_word("order") {
                    self.at += 1;
                    let w = self.ident()?;
                    match w.name.as_str() {
                        "pot" => ModOrderSpec::Pot,
                        "top" => ModOrderSpec::Top,
                        _ => {
                            return Err(ScriptError::new(
                                w.pos,
                                "module order must be 'pot' or 'top'",
                            ))
                        }
                    }
                } else {
                    ModOrderSpec::Pot
                };
                StmtKind::Module { name, rank, order }
            }
            "submodule" => {
                let name = self.ident()?;
                self.expect_word("in")?;
                let module = self.ident()?;
                self.expect_sym('=')?;
                let gens = self.list(|p| p.vector())?;
                StmtKind::Submodule { name, module, gens }
            }
            "presentation" => {
                let name = self.ident()?;
                self.expect_word("rank")?;
                let rank = self.small_int()? as usize;
                self.expect_sym('=')?;
                let relations = self.list(|p| p.vector())?;
                StmtKind::Presentation {
                    name,
                    rank,
                    relations,
                }
            }
            "hom" => {
                let name = self.ident()?;
                self.expect_sym(':')?;
                let source = self.hom_end()?;
                if self.peek().tok != Tok::Arrow {
                    return self.error("expected '->'");
                }
                self.at += 1;
                let target = self.hom_end()?;
                self.expect_sym('=')?;
                let images = self.list(|p| p.vector())?;
                StmtKind::Hom {
                    name,
                    source,
                    target,
                    images,
                }
            }
            "validate" => {
                if matches!(self.peek().tok, Tok::Ident(_)) {
                    StmtKind::Validate(Some(self.ident()?))
                } else {
                    StmtKind::Validate(None)
                }
            }
            "gb" => StmtKind::Gb(self.ident()?),
            "nf" => {
                let value = self.vector()?;
                self.expect_word("mod")?;
                StmtKind::Nf {
                    value,
                    target: self.ident()?,
                }
            }
            "member" if self.is_sym('-') && self.adjacent_word("image") => {
                self.at += 2;
                let value = self.vector()?;
                self.expect_word("in")?;
                StmtKind::MemberImage {
                    value,
                    hom: self.ident()?,
                }
            }
            "member" => {
                let value = self.vector()?;
                self.expect_word("in")?;
                StmtKind::Member {
                    value,
                    target: self.ident()?,
                }
            }
            "eliminate" => {
                let target = self.ident()?;
                self.expect_word("keep")?;
                StmtKind::Eliminate {
                    target,
                    keep: self.name_set()?,
                }
            }
            "intersect" => {
                let a = self.ident()?;
                let b = self.ident()?;
                StmtKind::Intersect(a, b)
            }
            "windep" => {
                let target = self.ident()?;
                StmtKind::Windep {
                    target,
                    keep: self.name_set()?,
                }
            }
            "dim" => StmtKind::Dim(self.ident()?),
            "kernel" => StmtKind::Kernel(self.ident()?),
            "surjective" => StmtKind::Surjective(self.ident()?),
            "print" => StmtKind::Print(self.expr()?),
            other => {
                return Err(ScriptError::new(
                    head.pos,
                    format!("unknown statement '{other}'"),
                ));
            }
        };
        Ok(Stmt { pos, kind })
    }

    /// `-image` written directly after `member`.
    fn adjacent_word(&self, w: &str) -> bool {
        let (Some(prev), Some(dash), Some(word)) = (
            self.tokens.get(self.at.wrapping_sub(1)),
            self.peek_at(0),
            self.peek_at(1),
        ) else {
            return false;
        };
        prev.end == dash.start && dash.end == word.start && word.tok == Tok::Ident(w.to_string())
    }

    fn algebra(&mut self) -> Result<StmtKind, ScriptError> {
        let name = self.ident()?;
        self.expect_word("field")?;
        let field = self.field_spec()?;
        self.expect_word("gens")?;
        let mut gens = Vec::new();
        while matches!(&self.peek().tok, Tok::Ident(s) if s != "order") {
            gens.push(self.ident()?);
        }
        if gens.is_empty() {
            return self.error("an algebra needs at least one generator");
        }
        let order = if self.is_word("order") {
            self.at += 1;
            self.order_spec()?
        } else {
            OrderSpec::DegLex(Vec::new())
        };
        Ok(StmtKind::Algebra {
            name,
            field,
            gens,
            order,
        })
    }

    fn field_spec(&mut self) -> Result<FieldSpec, ScriptError> {
        let id = self.ident()?;
        match id.name.as_str() {
            "QQ" => Ok(FieldSpec::Rational),
            "GF" => {
                let paren = self.is_sym('(');
                if paren {
                    self.at += 1;
                }
                let p = self.small_int()?;
                if paren {
                    self.expect_sym(')')?;
                }
                Ok(FieldSpec::Prime(p))
            }
            s if s.starts_with("GF")
                && s[2..].chars().all(|c| c.is_ascii_digit())
                && s.len() > 2 =>
            {
                s[2..]
                    .parse()
                    .map(FieldSpec::Prime)
                    .map_err(|_| ScriptError::new(id.pos, "modulus is too large"))
            }
            _ => Err(ScriptError::new(id.pos, "field must be QQ or GF <p>")),
        }
    }

    fn order_spec(&mut self) -> Result<OrderSpec, ScriptError> {
        let id = self.ident()?;
        match id.name.as_str() {
            "lex" | "deglex" | "degrevlex" => {
                let names = if self.is_sym('(') {
                    self.paren_names()?
                } else {
                    Vec::new()
                };
                Ok(match id.name.as_str() {
                    "lex" => OrderSpec::Lex(names),
                    "deglex" => OrderSpec::DegLex(names),
                    _ => OrderSpec::DegRevLex(names),
                })
            }
            "wdeglex" => {
                self.expect_sym('(')?;
                let mut items = Vec::new();
                loop {
                    let name = self.ident()?;
                    self.expect_sym(':')?;
                    let pos = self.peek().pos;
                    let w = self.small_int()?;
                    if w == 0 || w > u32::MAX as u64 {
                        return Err(ScriptError::new(
                            pos,
                            "weights must be positive 32-bit integers",
                        ));
                    }
                    items.push((name, w as u32));
                    if self.is_sym(',') {
                        self.at += 1;
                    } else {
                        break;
                    }
                }
                self.expect_sym(')')?;
                Ok(OrderSpec::WDegLex(items))
            }
            "elim" => {
                let keep = self.name_set()?;
                self.expect_word("over")?;
                let base = self.order_spec()?;
                Ok(OrderSpec::Elim {
                    keep,
                    base: Box::new(base),
                })
            }
            other => Err(ScriptError::new(
                id.pos,
                format!("unknown ordering '{other}'"),
            )),
        }
    }

    fn paren_names(&mut self) -> Result<Vec<Ident>, ScriptError> {
        self.expect_sym('(')?;
        let mut names = Vec::new();
        if !self.is_sym(')') {
            loop {
                names.push(self.ident()?);
                if self.is_sym(',') {
                    self.at += 1;
                } else {
                    break;
                }
            }
        }
        self.expect_sym(')')?;
        Ok(names)
    }

    /// `{a, b}`, possibly empty.
    fn name_set(&mut self) -> Result<Vec<Ident>, ScriptError> {
        self.expect_sym('{')?;
        let mut names = Vec::new();
        if !self.is_sym('}') {
            loop {
                names.push(self.ident()?);
                if self.is_sym(',') {
                    self.at += 1;
                } else {
                    break;
                }
            }
        }
        self.expect_sym('}')?;
        Ok(names)
    }

    fn hom_end(&mut self) -> Result<HomEnd, ScriptError> {
        if self.is_word("free") {
            self.at += 1;
            let rank = self.small_int()? as usize;
            Ok(HomEnd::Free(rank))
        } else {
            Ok(HomEnd::Named(self.ident()?))
        }
    }

    fn list<T>(
        &mut self,
        mut item: impl FnMut(&mut Self) -> Result<T, ScriptError>,
    ) -> Result<Vec<T>, ScriptError> {
        self.expect_sym('[')?;
        let mut out = Vec::new();
        if !self.is_sym(']') {
            loop {
                out.push(item(self)?);
                if self.is_sym(',') {
                    self.at += 1;
                } else {
                    break;
                }
            }
        }
        self.expect_sym(']')?;
        Ok(out)
    }

    /// `(p_1, …, p_s)` or a bare expression.
    fn vector(&mut self) -> Result<VecLit, ScriptError> {
        let pos = self.peek().pos;
        if self.is_sym('(') {
            self.at += 1;
            let mut comps = vec![self.expr()?];
            while self.is_sym(',') {
                self.at += 1;
                comps.push(self.expr()?);
            }
            self.expect_sym(')')?;
            Ok(VecLit { comps, pos })
        } else {
            Ok(VecLit {
                comps: vec![self.expr()?],
                pos,
            })
        }
    }

    fn expr(&mut self) -> Result<Expr, ScriptError> {
        let pos = self.peek().pos;
        let mut acc = if self.is_sym('-') {
            self.at += 1;
            Expr::Neg(Box::new(self.product()?), pos)
        } else {
            if self.is_sym('+') {
                self.at += 1;
            }
            self.product()?
        };
        loop {
            if self.is_sym('+') {
                self.at += 1;
                acc = Expr::Add(Box::new(acc), Box::new(self.product()?));
            } else if self.is_sym('-') {
                self.at += 1;
                acc = Expr::Sub(Box::new(acc), Box::new(self.product()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        match &self.peek().tok {
            Tok::Ident(s) => !RESERVED.contains(&s.as_str()),
            Tok::Sym('(') => true,
            _ => false,
        }
    }

    fn product(&mut self) -> Result<Expr, ScriptError> {
        let mut acc = self.power()?;
        loop {
            if self.is_sym('*') {
                self.at += 1;
                acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
            } else if self.is_sym('/') {
                let pos = self.peek().pos;
                self.at += 1;
                let d = self.int()?;
                if d.is_zero() {
                    return Err(ScriptError::new(pos, "division by zero"));
                }
                acc = Expr::Div(Box::new(acc), BigRational::from_integer(d), pos);
            } else if ends_in_number(&acc) && self.starts_factor() {
                // `2 x` and `1/2 y*x`
                acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Expr, ScriptError> {
        let base = self.primary()?;
        if self.is_sym('^') {
            let pos = self.peek().pos;
            self.at += 1;
            let k = self.small_int()?;
            let k = u32::try_from(k).map_err(|_| ScriptError::new(pos, "exponent is too large"))?;
            return Ok(Expr::Pow(Box::new(base), k, pos));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ScriptError> {
        let pos = self.peek().pos;
        match &self.peek().tok {
            Tok::Int(n) => {
                let n = n.clone();
                self.at += 1;
                Ok(Expr::Num(BigRational::from_integer(n), pos))
            }
            Tok::Ident(s) if !RESERVED.contains(&s.as_str()) => Ok(Expr::Var(self.ident()?)),
            Tok::Sym('(') => {
                self.at += 1;
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            t => self.error(format!("expected a polynomial, found {}", describe(t))),
        }
    }
}

/// Whether the expression is a numeric coefficient (possibly a fraction),
/// so that a following name multiplies it implicitly.
fn ends_in_number(e: &Expr) -> bool {
    match e {
        Expr::Num(..) => true,
        Expr::Div(inner, ..) => ends_in_number(inner),
        _ => false,
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Int(n) => format!("'{n}'"),
        Tok::Sym(c) => format!("'{c}'"),
        Tok::Arrow => "'->'".into(),
        Tok::Newline => "end of line".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_and_relations() {
        let s =
            parse("algebra W field QQ gens x d order deglex(x, d)\nrel d*x = x*d + 1\n").unwrap();
        assert_eq!(s.len(), 2);
        match &s[0].kind {
            StmtKind::Algebra { gens, order, .. } => {
                assert_eq!(gens.len(), 2);
                assert!(matches!(order, OrderSpec::DegLex(v) if v.len() == 2));
            }
            k => panic!("{k:?}"),
        }
        assert!(matches!(&s[1].kind, StmtKind::Rel { hi, .. } if hi.name == "d"));
    }

    #[test]
    fn implicit_coefficients() {
        let s = parse("rel d*x = 0 x*d + 1\nrel x*y = 1/2 y*x + z").unwrap();
        match &s[0].kind {
            StmtKind::Rel {
                rhs: Expr::Add(a, _),
                ..
            } => match a.as_ref() {
                Expr::Mul(l, _) => assert!(
                    matches!(l.as_ref(), Expr::Mul(n, _) if matches!(n.as_ref(), Expr::Num(..)))
                ),
                e => panic!("{e:?}"),
            },
            k => panic!("{k:?}"),
        }
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn commands() {
        let src = "gb I\nnf x^2*y mod I\nmember (x, y) in N\nmember-image (x) in phi\neliminate I keep {y}\n\
                   windep I {}\ndim I\nintersect I J\nkernel phi\nsurjective phi\n\
                   hom phi : free 2 -> M = [(x), (y)]\n";
        let s = parse(src).unwrap();
        assert_eq!(s.len(), 11);
        assert!(matches!(&s[3].kind, StmtKind::MemberImage { .. }));
        assert!(matches!(&s[5].kind, StmtKind::Windep { keep, .. } if keep.is_empty()));
        assert!(matches!(
            &s[10].kind,
            StmtKind::Hom {
                source: HomEnd::Free(2),
                ..
            }
        ));
    }

    #[test]
    fn member_with_negative_polynomial() {
        let s = parse("member -image in I").unwrap();
        assert!(matches!(&s[0].kind, StmtKind::Member { .. }));
    }

    #[test]
    fn errors_have_positions() {
        let e = parse("ideal I = [x,\n  y +]\n").unwrap_err();
        assert_eq!((e.pos.line, e.pos.col), (2, 6));
        let e = parse("frobnicate I").unwrap_err();
        assert_eq!((e.pos.line, e.pos.col), (1, 1));
    }

    #[test]
    fn completeness() {
        assert!(!is_complete("ideal I = [x,"));
        assert!(is_complete("ideal I = [x, y]"));
    }
}
