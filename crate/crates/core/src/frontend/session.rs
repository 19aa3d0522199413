//! Statement-by-statement evaluation of a script.

use std::cell::OnceCell;
use std::collections::HashMap;
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::One;
use serde_json::json;

use super::ast::*;
use super::{Options, ScriptError};
use crate::algebra::{validate_algebra, AlgebraDef, ValidatedAlgebra};
use crate::elimination::{self, GkDimension};
use crate::error::{AlgebraError, ClosureFailure, EliminationError, GroebnerError, HomError};
use crate::field::{Field, FieldElem};
use crate::groebner::{self, GroebnerBasis, ReductionStep};
use crate::homs::{FreeHom, HomCheck, ImageMembership, Presentation, QuotientHom, Surjectivity};
use crate::module::{FreeModule, VecElem};
use crate::monomial::Exponent;
use crate::order::{elim_order, OrderDescriptor};
use crate::poly::Poly;
use crate::render;

struct Pending {
    name: Ident,
    def: AlgebraDef,
}

struct Submodule {
    module: FreeModule,
    gens: Vec<VecElem>,
    gb: OnceCell<GroebnerBasis>,
}

// Always boxed inside `Entity`.
#[allow(clippy::large_enum_variant)]
enum HomKind {
    Free(FreeHom),
    Quotient(QuotientHom),
}

enum Entity {
    Algebra(Result<ValidatedAlgebra, AlgebraError>, Vec<String>),
    /// Ideals are rank-one submodules.
    Ideal(Submodule),
    Module(FreeModule),
    Submodule(Submodule),
    Presentation(FreeModule, Vec<VecElem>),
    Hom(Box<HomKind>),
}

impl Entity {
    fn kind(&self) -> &'static str {
        match self {
            Entity::Algebra(..) => "an algebra",
            Entity::Ideal(_) => "an ideal",
            Entity::Module(_) => "a module",
            Entity::Submodule(_) => "a submodule",
            Entity::Presentation(..) => "a presentation",
            Entity::Hom(_) => "a homomorphism",
        }
    }
}

/// Evaluation state: named bindings, the active algebra and buffered output.
pub struct Session {
    options: Options,
    entities: HashMap<String, Entity>,
    active: Option<String>,
    pending: Option<Pending>,
    stdout: String,
    stderr: String,
}

type Res<T> = Result<T, ScriptError>;

fn err<T>(pos: Pos, msg: impl Into<String>) -> Res<T> {
    Err(ScriptError::new(pos, msg))
}

impl Session {
    pub fn new(options: Options) -> Self {
        Session {
            options,
            entities: HashMap::new(),
            active: None,
            pending: None,
            stdout: String::new(),
            stderr: String::new(),
        }
    }

    pub fn take_stdout(&mut self) -> String {
        std::mem::take(&mut self.stdout)
    }

    pub fn take_stderr(&mut self) -> String {
        std::mem::take(&mut self.stderr)
    }

    fn emit(&mut self, pos: Pos, command: &str, text: String) {
        if self.options.json {
            let v = json!({ "line": pos.line, "command": command, "output": text });
            self.stdout.push_str(&v.to_string());
        } else {
            self.stdout.push_str(&text);
        }
        self.stdout.push('\n');
    }

    fn warn(&mut self, pos: Pos, text: String) {
        let _ = writeln!(self.stderr, "warning: line {}: {}", pos.line, text);
    }

    /// Validates an algebra whose relations are still being collected.
    pub fn finish(&mut self) -> Res<()> {
        let Some(Pending { name, mut def }) = self.pending.take() else {
            return Ok(());
        };
        for (j, i) in def.fill_commuting() {
            let (hi, lo) = (&def.names[j], &def.names[i]);
            self.warn(
                name.pos,
                format!("no relation for {hi}*{lo}; assuming {hi}*{lo} = {lo}*{hi}"),
            );
        }
        let names = def.names.clone();
        let result = validate_algebra(def);
        self.entities
            .insert(name.name.clone(), Entity::Algebra(result, names));
        self.active = Some(name.name);
        Ok(())
    }

    pub fn execute(&mut self, stmt: &Stmt) -> Res<()> {
        if let StmtKind::Rel { hi, lo, rhs } = &stmt.kind {
            return self.relation(stmt.pos, hi, lo, rhs);
        }
        self.finish()?;
        let pos = stmt.pos;
        match &stmt.kind {
            StmtKind::Rel { .. } => unreachable!("handled above"),
            StmtKind::Algebra {
                name,
                field,
                gens,
                order,
            } => self.algebra(name, field, gens, order),
            StmtKind::Use(name) => match self.entities.get(&name.name) {
                Some(Entity::Algebra(..)) => {
                    self.active = Some(name.name.clone());
                    Ok(())
                }
                _ => err(name.pos, format!("'{}' is not an algebra", name.name)),
            },
            StmtKind::Ideal { name, gens } => {
                let alg = self.active_algebra(pos)?;
                let module = FreeModule::ideal(&alg);
                let gens = gens
                    .iter()
                    .map(|e| Ok(module.from_poly(&literal(&alg, e)?)))
                    .collect::<Res<Vec<_>>>()?;
                self.bind(
                    name,
                    Entity::Ideal(Submodule {
                        module,
                        gens,
                        gb: OnceCell::new(),
                    }),
                )
            }
            StmtKind::Module { name, rank, order } => {
                let alg = self.active_algebra(pos)?;
                if *rank == 0 {
                    return err(pos, "rank must be positive");
                }
                let module = match order {
                    ModOrderSpec::Pot => FreeModule::pot(&alg, *rank),
                    ModOrderSpec::Top => FreeModule::top(&alg, *rank),
                };
                self.bind(name, Entity::Module(module))
            }
            StmtKind::Submodule { name, module, gens } => {
                let m = match self.lookup(module)? {
                    Entity::Module(m) => m.clone(),
                    e => {
                        return err(
                            module.pos,
                            format!("'{}' is {}, not a module", module.name, e.kind()),
                        )
                    }
                };
                let gens = gens
                    .iter()
                    .map(|v| vector(&m, v))
                    .collect::<Res<Vec<_>>>()?;
                self.bind(
                    name,
                    Entity::Submodule(Submodule {
                        module: m,
                        gens,
                        gb: OnceCell::new(),
                    }),
                )
            }
            StmtKind::Presentation {
                name,
                rank,
                relations,
            } => {
                let alg = self.active_algebra(pos)?;
                if *rank == 0 {
                    return err(pos, "rank must be positive");
                }
                let m = FreeModule::pot(&alg, *rank);
                let rels = relations
                    .iter()
                    .map(|v| vector(&m, v))
                    .collect::<Res<Vec<_>>>()?;
                self.bind(name, Entity::Presentation(m, rels))
            }
            StmtKind::Hom {
                name,
                source,
                target,
                images,
            } => self.hom(pos, name, source, target, images),
            StmtKind::Validate(name) => self.validate(pos, name.as_ref()),
            StmtKind::Gb(name) => {
                let sub = self.submodule(name)?;
                let text = gb_of(sub)
                    .map_err(|e| ScriptError::new(pos, e.to_string()))?
                    .render();
                self.emit(pos, "gb", text);
                Ok(())
            }
            StmtKind::Nf { value, target } => {
                let (text, _) = self.divide(pos, value, target)?;
                self.emit(pos, "nf", text);
                Ok(())
            }
            StmtKind::Member { value, target } => {
                let (_, zero) = self.divide(pos, value, target)?;
                self.emit(pos, "member", zero.to_string());
                Ok(())
            }
            StmtKind::Eliminate { target, keep } => self.eliminate(pos, target, keep),
            StmtKind::Intersect(a, b) => self.intersect(pos, a, b),
            StmtKind::Windep { target, keep } => {
                let (alg, gens) = self.ideal_gens(target)?;
                let keep = gen_indices(&alg, keep)?;
                let r = elimination::weakly_independent(&alg, &gens, &keep)
                    .map_err(|e| elim_error(pos, &alg, e))?;
                self.emit(pos, "windep", r.to_string());
                Ok(())
            }
            StmtKind::Dim(target) => {
                let (alg, gens) = self.ideal_gens(target)?;
                let d = elimination::gk_dim_search(&alg, &gens)
                    .map_err(|e| elim_error(pos, &alg, e))?;
                self.emit(pos, "dim", render_dim(&alg, &d));
                Ok(())
            }
            StmtKind::Kernel(name) => {
                let text = match self.hom_ref(name)? {
                    HomKind::Free(h) => h.kernel().map_err(|e| hom_error(pos, e))?.render(),
                    HomKind::Quotient(h) => {
                        let k = h.kernel().map_err(|e| hom_error(pos, e))?;
                        let m = h.source().module();
                        render::list(&k.iter().map(|v| m.render(&m.adopt(v))).collect::<Vec<_>>())
                    }
                };
                self.emit(pos, "kernel", text);
                Ok(())
            }
            StmtKind::MemberImage { value, hom } => {
                let (answer, source) = match self.hom_ref(hom)? {
                    HomKind::Free(h) => {
                        let eta = vector(h.target(), value)?;
                        (
                            h.image_membership(&eta).map_err(|e| hom_error(pos, e))?,
                            h.source().clone(),
                        )
                    }
                    HomKind::Quotient(h) => {
                        let eta = vector(h.target().module(), value)?;
                        (
                            h.image_membership(&eta).map_err(|e| hom_error(pos, e))?,
                            h.source().module().clone(),
                        )
                    }
                };
                let text = match answer {
                    ImageMembership::NotInImage => "false".to_string(),
                    ImageMembership::InImage(xi) => {
                        format!("true, preimage {}", source.render(&xi))
                    }
                };
                self.emit(pos, "member-image", text);
                Ok(())
            }
            StmtKind::Surjective(name) => {
                let (answer, alg) = match self.hom_ref(name)? {
                    HomKind::Free(h) => (h.is_surjective(), h.source().algebra().clone()),
                    HomKind::Quotient(h) => {
                        (h.is_surjective(), h.source().module().algebra().clone())
                    }
                };
                let text = match answer.map_err(|e| hom_error(pos, e))? {
                    Surjectivity::NotSurjective => "false".to_string(),
                    Surjectivity::Surjective(rows) => {
                        let rows: Vec<String> = rows.iter().map(|r| render_row(&alg, r)).collect();
                        format!("true, rows {}", render::list(&rows))
                    }
                };
                self.emit(pos, "surjective", text);
                Ok(())
            }
            StmtKind::Print(e) => {
                let alg = self.active_algebra(pos)?;
                let p = evaluate(&alg, e)?;
                self.emit(pos, "print", alg.render(&p));
                Ok(())
            }
        }
    }

    fn bind(&mut self, name: &Ident, e: Entity) -> Res<()> {
        self.entities.insert(name.name.clone(), e);
        Ok(())
    }

    fn lookup(&self, name: &Ident) -> Res<&Entity> {
        self.entities.get(&name.name).ok_or_else(|| {
            ScriptError::new(name.pos, format!("unknown identifier '{}'", name.name))
        })
    }

    fn active_algebra(&self, pos: Pos) -> Res<ValidatedAlgebra> {
        let Some(name) = &self.active else {
            return err(pos, "no algebra has been declared");
        };
        match self.entities.get(name) {
            Some(Entity::Algebra(Ok(a), _)) => Ok(a.clone()),
            Some(Entity::Algebra(Err(e), names)) => err(
                pos,
                format!(
                    "algebra {name} is invalid: {}",
                    describe_algebra_error(e, names)
                ),
            ),
            _ => err(pos, "no algebra has been declared"),
        }
    }

    fn submodule(&self, name: &Ident) -> Res<&Submodule> {
        match self.lookup(name)? {
            Entity::Ideal(s) | Entity::Submodule(s) => Ok(s),
            e => err(
                name.pos,
                format!("'{}' is {}, not an ideal or submodule", name.name, e.kind()),
            ),
        }
    }

    fn ideal_gens(&self, name: &Ident) -> Res<(ValidatedAlgebra, Vec<Poly>)> {
        match self.lookup(name)? {
            Entity::Ideal(s) => Ok((
                s.module.algebra().clone(),
                s.gens.iter().map(|v| s.module.to_poly(v)).collect(),
            )),
            e => err(
                name.pos,
                format!("'{}' is {}, not an ideal", name.name, e.kind()),
            ),
        }
    }

    fn hom_ref(&self, name: &Ident) -> Res<&HomKind> {
        match self.lookup(name)? {
            Entity::Hom(h) => Ok(h),
            e => err(
                name.pos,
                format!("'{}' is {}, not a homomorphism", name.name, e.kind()),
            ),
        }
    }

    fn relation(&mut self, pos: Pos, hi: &Ident, lo: &Ident, rhs: &Expr) -> Res<()> {
        let Some(p) = self.pending.as_mut() else {
            return err(pos, "'rel' must directly follow an algebra declaration");
        };
        let def = &mut p.def;
        let index = |id: &Ident| {
            def.index_of(&id.name)
                .ok_or_else(|| ScriptError::new(id.pos, format!("unknown generator '{}'", id.name)))
        };
        let (j, i) = (index(hi)?, index(lo)?);
        if j <= i {
            return err(
                hi.pos,
                format!(
                    "relations must be written as higher*lower: {} is declared before {}",
                    hi.name, lo.name
                ),
            );
        }
        if def.relations.contains(j, i) {
            return err(
                pos,
                format!("relation {}*{} is given twice", hi.name, lo.name),
            );
        }
        let f = literal_in(&def.names, def.field, &def.order, rhs)?;
        let mut target = Exponent::unit(def.n(), i);
        target.inc(j);
        let lambda = f
            .coeff_of(&target)
            .cloned()
            .unwrap_or_else(|| def.field.zero());
        let tail = f.sub(&Poly::monomial(lambda.clone(), target), &def.order);
        def.relations.insert(j, i, lambda, tail);
        Ok(())
    }

    fn algebra(
        &mut self,
        name: &Ident,
        field: &FieldSpec,
        gens: &[Ident],
        order: &OrderSpec,
    ) -> Res<()> {
        let names: Vec<String> = gens.iter().map(|g| g.name.clone()).collect();
        for (k, g) in gens.iter().enumerate() {
            if names[..k].contains(&g.name) {
                return err(g.pos, format!("generator '{}' is declared twice", g.name));
            }
        }
        let field = match self.options.field {
            Some(f) => f,
            None => match field {
                FieldSpec::Rational => Field::Rational,
                FieldSpec::Prime(p) => {
                    Field::prime(*p).map_err(|e| ScriptError::new(name.pos, e.to_string()))?
                }
            },
        };
        let order = order_descriptor(&names, order)?;
        self.pending = Some(Pending {
            name: name.clone(),
            def: AlgebraDef::new(names, field, order),
        });
        Ok(())
    }

    fn validate(&mut self, pos: Pos, name: Option<&Ident>) -> Res<()> {
        let key = match name {
            Some(n) => n.name.clone(),
            None => match &self.active {
                Some(a) => a.clone(),
                None => return err(pos, "no algebra has been declared"),
            },
        };
        let text = match self.entities.get(&key) {
            Some(Entity::Algebra(Ok(_), _)) => "valid".to_string(),
            Some(Entity::Algebra(Err(e), names)) => {
                format!("invalid: {}", describe_algebra_error(e, names))
            }
            Some(e) => return err(pos, format!("'{key}' is {}, not an algebra", e.kind())),
            None => return err(pos, format!("unknown identifier '{key}'")),
        };
        self.emit(pos, "validate", text);
        Ok(())
    }

    fn hom(
        &mut self,
        pos: Pos,
        name: &Ident,
        source: &HomEnd,
        target: &HomEnd,
        images: &[VecLit],
    ) -> Res<()> {
        let alg = self.active_algebra(pos)?;
        let end = |e: &HomEnd| -> Res<(FreeModule, Option<Vec<VecElem>>)> {
            match e {
                HomEnd::Free(0) => err(pos, "rank must be positive"),
                HomEnd::Free(r) => Ok((FreeModule::pot(&alg, *r), None)),
                HomEnd::Named(id) => match self.lookup(id)? {
                    Entity::Module(m) => Ok((m.clone(), None)),
                    Entity::Presentation(m, rels) => Ok((m.clone(), Some(rels.clone()))),
                    e => err(
                        id.pos,
                        format!(
                            "'{}' is {}, not a module or presentation",
                            id.name,
                            e.kind()
                        ),
                    ),
                },
            }
        };
        let (sm, srels) = end(source)?;
        let (tm, trels) = end(target)?;
        if images.len() != sm.rank() {
            return err(
                pos,
                format!(
                    "{} images given for a source of rank {}",
                    images.len(),
                    sm.rank()
                ),
            );
        }
        let etas = images
            .iter()
            .map(|v| vector(&tm, v))
            .collect::<Res<Vec<_>>>()?;
        let kind = if srels.is_none() && trels.is_none() {
            HomKind::Free(FreeHom::new(&tm, etas).map_err(|e| hom_error(pos, e))?)
        } else {
            let src = Presentation::new(&sm, srels.unwrap_or_default())
                .map_err(|e| ScriptError::new(pos, e.to_string()))?;
            let tgt = Presentation::new(&tm, trels.unwrap_or_default())
                .map_err(|e| ScriptError::new(pos, e.to_string()))?;
            match crate::homs::hom_exists(&src, &tgt, &etas).map_err(|e| hom_error(pos, e))? {
                HomCheck::NotWellDefined(q) => {
                    return err(
                        pos,
                        format!(
                            "homomorphism {} is not well defined: source relation {} does not map into the target relations",
                            name.name,
                            q + 1
                        ),
                    )
                }
                HomCheck::WellDefined => {}
            }
            HomKind::Quotient(QuotientHom::new(src, tgt, etas).map_err(|e| hom_error(pos, e))?)
        };
        self.bind(name, Entity::Hom(Box::new(kind)))
    }

    /// Normal form text and whether the remainder vanished.
    fn divide(&mut self, pos: Pos, value: &VecLit, target: &Ident) -> Res<(String, bool)> {
        let sub = self.submodule(target)?;
        let gb = gb_of(sub)
            .map_err(|e| ScriptError::new(pos, e.to_string()))?
            .clone();
        let m = gb.module();
        let v = vector(m, value)?;
        let mut log = String::new();
        let d = if self.options.trace {
            let mut step = 0;
            let mut trace = |s: &ReductionStep<'_>| {
                step += 1;
                let lead = s.before.leading_term().expect("nonzero");
                let lead = m.render(&m.vector([(lead.coeff.clone(), lead.exp.clone(), lead.comp)]));
                let cof = m
                    .algebra()
                    .render(&Poly::monomial(s.coeff.clone(), s.shift.clone()));
                let _ = writeln!(
                    log,
                    "trace: step {step}: leading term {lead}, subtract ({cof}) * g{}",
                    s.index + 1
                );
            };
            groebner::normal_form_traced(m, &v, gb.elements(), &mut trace)
        } else {
            groebner::normal_form(m, &v, gb.elements())
        }
        .map_err(|e| ScriptError::new(pos, e.to_string()))?;
        self.stderr.push_str(&log);
        Ok((m.render(&d.remainder), d.remainder.is_zero()))
    }

    fn eliminate(&mut self, pos: Pos, target: &Ident, keep: &[Ident]) -> Res<()> {
        let text = match self.lookup(target)? {
            Entity::Ideal(s) => {
                let alg = s.module.algebra().clone();
                let gens: Vec<Poly> = s.gens.iter().map(|v| s.module.to_poly(v)).collect();
                let idx = gen_indices(&alg, keep)?;
                match elimination::eliminate_ideal(&alg, &gens, &idx) {
                    Ok(gb) => gb.render(),
                    Err(EliminationError::ClosureFailure(c)) => closure_text(&alg, &c),
                    Err(e) => return Err(elim_error(pos, &alg, e)),
                }
            }
            Entity::Submodule(s) => {
                let mut comps = Vec::new();
                for k in keep {
                    let c = k
                        .name
                        .strip_prefix('e')
                        .and_then(|d| d.parse::<usize>().ok())
                        .filter(|&c| c >= 1 && c <= s.module.rank())
                        .ok_or_else(|| {
                            ScriptError::new(
                                k.pos,
                                format!("'{}' is not a component e1..e{}", k.name, s.module.rank()),
                            )
                        })?;
                    comps.push(c - 1);
                }
                let alg = s.module.algebra().clone();
                elimination::eliminate_module(&s.module, &s.gens, &comps)
                    .map_err(|e| elim_error(pos, &alg, e))?
                    .render()
            }
            e => {
                return err(
                    target.pos,
                    format!(
                        "'{}' is {}, not an ideal or submodule",
                        target.name,
                        e.kind()
                    ),
                )
            }
        };
        self.emit(pos, "eliminate", text);
        Ok(())
    }

    fn intersect(&mut self, pos: Pos, a: &Ident, b: &Ident) -> Res<()> {
        let (sa, sb) = (self.submodule(a)?, self.submodule(b)?);
        if sa.module != sb.module {
            return err(
                b.pos,
                format!("'{}' and '{}' live in different modules", a.name, b.name),
            );
        }
        let alg = sa.module.algebra().clone();
        let gb = elimination::intersect_submodules(&sa.module, &sa.gens, &sb.gens)
            .map_err(|e| elim_error(pos, &alg, e))?;
        self.emit(pos, "intersect", gb.render());
        Ok(())
    }
}

fn gb_of(s: &Submodule) -> Result<&GroebnerBasis, GroebnerError> {
    if let Some(gb) = s.gb.get() {
        return Ok(gb);
    }
    let gb = groebner::reduce_basis(&groebner::buchberger(&s.module, &s.gens)?);
    Ok(s.gb.get_or_init(|| gb))
}

fn gen_indices(alg: &ValidatedAlgebra, names: &[Ident]) -> Res<Vec<usize>> {
    names
        .iter()
        .map(|id| {
            alg.names()
                .iter()
                .position(|n| n == &id.name)
                .ok_or_else(|| ScriptError::new(id.pos, format!("unknown generator '{}'", id.name)))
        })
        .collect()
}

fn order_descriptor(names: &[String], spec: &OrderSpec) -> Res<OrderDescriptor> {
    let n = names.len();
    let perm = |ids: &[Ident]| -> Res<Vec<usize>> {
        if ids.is_empty() {
            return Ok((0..n).collect());
        }
        let mut out = Vec::new();
        for id in ids {
            let k = names.iter().position(|s| s == &id.name).ok_or_else(|| {
                ScriptError::new(id.pos, format!("unknown generator '{}'", id.name))
            })?;
            if out.contains(&k) {
                return err(
                    id.pos,
                    format!("generator '{}' appears twice in the ordering", id.name),
                );
            }
            out.push(k);
        }
        if out.len() != n {
            return err(ids[0].pos, "an ordering must list every generator");
        }
        Ok(out)
    };
    Ok(match spec {
        OrderSpec::Lex(ids) => OrderDescriptor::Lex(perm(ids)?),
        OrderSpec::DegLex(ids) => OrderDescriptor::DegLex {
            weights: vec![1; n],
            precedence: perm(ids)?,
        },
        OrderSpec::DegRevLex(ids) => OrderDescriptor::DegRevLex {
            weights: vec![1; n],
            precedence: perm(ids)?,
        },
        OrderSpec::WDegLex(items) => {
            let ids: Vec<Ident> = items.iter().map(|(id, _)| id.clone()).collect();
            let precedence = perm(&ids)?;
            let mut weights = vec![1; n];
            for (k, (_, w)) in precedence.iter().zip(items) {
                weights[*k] = *w;
            }
            OrderDescriptor::DegLex {
                weights,
                precedence,
            }
        }
        OrderSpec::Elim { keep, base } => {
            let base = order_descriptor(names, base)?;
            let mut idx = Vec::new();
            for id in keep {
                idx.push(names.iter().position(|s| s == &id.name).ok_or_else(|| {
                    ScriptError::new(id.pos, format!("unknown generator '{}'", id.name))
                })?);
            }
            let pos = keep.first().map_or(Pos::default(), |k| k.pos);
            elim_order(&base, &idx).map_err(|e| ScriptError::new(pos, e.to_string()))?
        }
    })
}

fn coefficient(field: Field, q: &BigRational, pos: Pos) -> Res<FieldElem> {
    field
        .from_ratio(q.numer(), q.denom())
        .map_err(|_| ScriptError::new(pos, format!("coefficient {q} is undefined over {field}")))
}

/// A polynomial written in PBW form: a sum of terms `c * a_i^k * …` with the
/// generators in declaration order.
fn literal(alg: &ValidatedAlgebra, e: &Expr) -> Res<Poly> {
    literal_in(alg.names(), alg.field(), alg.order(), e)
}

fn literal_in(names: &[String], field: Field, ord: &OrderDescriptor, e: &Expr) -> Res<Poly> {
    let mut summands = Vec::new();
    flatten_sum(e, true, &mut summands);
    let mut terms = Vec::new();
    for (positive, t) in summands {
        let mut coeff = BigRational::one();
        let mut exp = Exponent::zero(names.len());
        let mut last = 0;
        let mut factors = Vec::new();
        flatten_product(t, &mut factors)?;
        for f in factors {
            match f {
                Factor::Num(q) => coeff *= q,
                Factor::Var(id, k) => {
                    let v = names.iter().position(|s| s == &id.name).ok_or_else(|| {
                        ScriptError::new(id.pos, format!("unknown generator '{}'", id.name))
                    })?;
                    if v < last {
                        return err(
                            id.pos,
                            format!(
                                "monomial is not in PBW order: {} must come before {}",
                                id.name, names[last]
                            ),
                        );
                    }
                    last = v;
                    let new = exp
                        .get(v)
                        .checked_add(k)
                        .ok_or_else(|| ScriptError::new(id.pos, "exponent is too large"))?;
                    exp.set(v, new);
                }
            }
        }
        if !positive {
            coeff = -coeff;
        }
        terms.push((coefficient(field, &coeff, t.pos())?, exp));
    }
    Ok(Poly::from_terms(terms, ord))
}

enum Factor<'a> {
    Num(BigRational),
    Var(&'a Ident, u32),
}

fn flatten_sum<'a>(e: &'a Expr, positive: bool, out: &mut Vec<(bool, &'a Expr)>) {
    match e {
        Expr::Add(a, b) => {
            flatten_sum(a, positive, out);
            flatten_sum(b, positive, out);
        }
        Expr::Sub(a, b) => {
            flatten_sum(a, positive, out);
            flatten_sum(b, !positive, out);
        }
        Expr::Neg(a, _) => flatten_sum(a, !positive, out),
        other => out.push((positive, other)),
    }
}

fn flatten_product<'a>(e: &'a Expr, out: &mut Vec<Factor<'a>>) -> Res<()> {
    match e {
        Expr::Num(q, _) => out.push(Factor::Num(q.clone())),
        Expr::Var(id) => out.push(Factor::Var(id, 1)),
        Expr::Mul(a, b) => {
            flatten_product(a, out)?;
            flatten_product(b, out)?;
        }
        Expr::Div(a, q, _) => {
            flatten_product(a, out)?;
            out.push(Factor::Num(q.recip()));
        }
        Expr::Pow(base, k, pos) => match base.as_ref() {
            Expr::Var(id) => out.push(Factor::Var(id, *k)),
            Expr::Num(q, _) => out.push(Factor::Num(num_traits::pow(q.clone(), *k as usize))),
            _ => {
                return err(
                    *pos,
                    "only generators and numbers may be raised to a power in PBW form",
                )
            }
        },
        other => {
            return err(
                other.pos(),
                "expected a PBW term; use 'print' to expand general products",
            )
        }
    }
    Ok(())
}

/// Evaluates an arbitrary expression with the algebra's multiplication.
fn evaluate(alg: &ValidatedAlgebra, e: &Expr) -> Res<Poly> {
    Ok(match e {
        Expr::Num(q, pos) => alg.constant(coefficient(alg.field(), q, *pos)?),
        Expr::Var(id) => {
            let k = gen_indices(alg, std::slice::from_ref(id))?[0];
            alg.generator(k)
        }
        Expr::Neg(a, _) => evaluate(alg, a)?.neg(),
        Expr::Add(a, b) => alg.add(&evaluate(alg, a)?, &evaluate(alg, b)?),
        Expr::Sub(a, b) => alg.sub(&evaluate(alg, a)?, &evaluate(alg, b)?),
        Expr::Mul(a, b) => alg.mul(&evaluate(alg, a)?, &evaluate(alg, b)?),
        Expr::Div(a, q, pos) => {
            let c = coefficient(alg.field(), &q.recip(), *pos)?;
            evaluate(alg, a)?.scale(&c)
        }
        Expr::Pow(a, k, _) => {
            let base = evaluate(alg, a)?;
            let mut acc = alg.one();
            for _ in 0..*k {
                acc = alg.mul(&acc, &base);
            }
            acc
        }
    })
}

fn vector(m: &FreeModule, v: &VecLit) -> Res<VecElem> {
    if v.comps.len() != m.rank() {
        return err(
            v.pos,
            format!("expected {} components, found {}", m.rank(), v.comps.len()),
        );
    }
    let polys = v
        .comps
        .iter()
        .map(|e| literal(m.algebra(), e))
        .collect::<Res<Vec<_>>>()?;
    Ok(m.from_polys(&polys))
}

fn pair_name(names: &[String], j: usize, i: usize) -> String {
    format!("{}*{}", names[j], names[i])
}

/// Describes a rejected presentation using generator names.
pub fn describe_algebra_error(e: &AlgebraError, names: &[String]) -> String {
    match e {
        AlgebraError::IncompleteRelationTable { j, i } => {
            format!("no relation for {}", pair_name(names, *j, *i))
        }
        AlgebraError::MalformedRelation { j, i } => {
            format!("relation {} is malformed", pair_name(names, *j, *i))
        }
        AlgebraError::ZeroLambda { j, i } => {
            format!(
                "relation {} has a zero coefficient on {}",
                pair_name(names, *j, *i),
                pair_name(names, *i, *j)
            )
        }
        AlgebraError::LeadingMonomialNotSmaller { j, i } => format!(
            "the lower-order part of relation {} is not below {}",
            pair_name(names, *j, *i),
            pair_name(names, *i, *j)
        ),
        AlgebraError::OverlapInconsistent {
            k,
            j,
            i,
            left,
            right,
        } => {
            let (a, b, c) = (&names[*k], &names[*j], &names[*i]);
            format!("overlap {a}*{b}*{c} is inconsistent: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")
        }
        other => other.to_string(),
    }
}

fn closure_text(alg: &ValidatedAlgebra, c: &ClosureFailure) -> String {
    format!(
        "closure failure: relation {} produces {} outside the subalgebra",
        pair_name(alg.names(), c.j, c.i),
        render::monomial(&c.monomial, alg.names())
    )
}

fn elim_error(pos: Pos, alg: &ValidatedAlgebra, e: EliminationError) -> ScriptError {
    let msg = match &e {
        EliminationError::ClosureFailure(c) => closure_text(alg, c),
        EliminationError::Algebra(a) | EliminationError::Groebner(GroebnerError::Algebra(a)) => {
            format!(
                "the elimination ordering is not admissible for this algebra: {}",
                describe_algebra_error(a, alg.names())
            )
        }
        _ => e.to_string(),
    };
    ScriptError::new(pos, msg)
}

fn hom_error(pos: Pos, e: HomError) -> ScriptError {
    match e {
        HomError::HomNotWellDefined(q) => ScriptError::new(
            pos,
            format!("homomorphism is not well defined: source relation {} does not map into the target relations", q + 1),
        ),
        other => ScriptError::new(pos, other.to_string()),
    }
}

fn render_dim(alg: &ValidatedAlgebra, d: &GkDimension) -> String {
    let names: Vec<&str> = d.witness.iter().map(|&k| alg.names()[k].as_str()).collect();
    let mut s = format!("{} {{{}}}", d.value, names.join(", "));
    if !d.exact {
        s.push_str(" (weak-independence number)");
    }
    s
}

fn render_row(alg: &ValidatedAlgebra, row: &[Poly]) -> String {
    if row.len() == 1 {
        return alg.render(&row[0]);
    }
    let parts: Vec<String> = row.iter().map(|p| alg.render(p)).collect();
    format!("({})", parts.join(", "))
}
