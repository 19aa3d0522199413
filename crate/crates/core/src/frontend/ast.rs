//! Syntax tree of a `.solv` script.

use num_rational::BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub pos: Pos,
}

/// An arithmetic expression over generator names.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigRational, Pos),
    Var(Ident),
    Neg(Box<Expr>, Pos),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Division by a numeric literal.
    Div(Box<Expr>, BigRational, Pos),
    Pow(Box<Expr>, u32, Pos),
}

impl Expr {
    pub fn pos(&self) -> Pos {
        match self {
            Expr::Num(_, p) | Expr::Neg(_, p) | Expr::Div(_, _, p) | Expr::Pow(_, _, p) => *p,
            Expr::Var(id) => id.pos,
            Expr::Add(a, _) | Expr::Sub(a, _) | Expr::Mul(a, _) => a.pos(),
        }
    }
}

/// A tuple of components; a bare expression is a one-component vector.
#[derive(Clone, Debug, PartialEq)]
pub struct VecLit {
    pub comps: Vec<Expr>,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    /// Generators most significant first; empty means declaration order.
    Lex(Vec<Ident>),
    DegLex(Vec<Ident>),
    DegRevLex(Vec<Ident>),
    /// Weighted degree, ties lexicographic in the listed order.
    WDegLex(Vec<(Ident, u32)>),
    Elim {
        keep: Vec<Ident>,
        base: Box<OrderSpec>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModOrderSpec {
    Pot,
    Top,
}

/// Source or target of a homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomEnd {
    Free(usize),
    Named(Ident),
}

#[derive(Clone, Debug, PartialEq)]
pub enum StmtKind {
    Algebra {
        name: Ident,
        field: FieldSpec,
        gens: Vec<Ident>,
        order: OrderSpec,
    },
    Rel {
        hi: Ident,
        lo: Ident,
        rhs: Expr,
    },
    Use(Ident),
    Ideal {
        name: Ident,
        gens: Vec<Expr>,
    },
    Module {
        name: Ident,
        rank: usize,
        order: ModOrderSpec,
    },
    Submodule {
        name: Ident,
        module: Ident,
        gens: Vec<VecLit>,
    },
    Presentation {
        name: Ident,
        rank: usize,
        relations: Vec<VecLit>,
    },
    Hom {
        name: Ident,
        source: HomEnd,
        target: HomEnd,
        images: Vec<VecLit>,
    },
    Validate(Option<Ident>),
    Gb(Ident),
    Nf {
        value: VecLit,
        target: Ident,
    },
    Member {
        value: VecLit,
        target: Ident,
    },
    Eliminate {
        target: Ident,
        keep: Vec<Ident>,
    },
    Intersect(Ident, Ident),
    Windep {
        target: Ident,
        keep: Vec<Ident>,
    },
    Dim(Ident),
    Kernel(Ident),
    MemberImage {
        value: VecLit,
        hom: Ident,
    },
    Surjective(Ident),
    Print(Expr),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Stmt {
    pub pos: Pos,
    pub kind: StmtKind,
}
