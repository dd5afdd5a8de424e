use std::fmt;

use num_traits::{One, Zero};

use super::ast::{Generator, Kind, Node, Symbol, Ty};
use super::ExprError;
use crate::arith_a::AElem;
use crate::central_extension::{pi_projection, CentralVec, LElem, LHatElem};
use crate::scalar::{render_scalar, Scalar};
use crate::sl2::{Equitable, Sl2Vec};
use crate::tetrahedron::{sigma, sigma_after_pi, sigma_hat};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Model {
    L,
    #[default]
    LHat,
}

/// Which map sends generator symbols to the loop algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Images {
    /// `x[i,j] -> σ(x_{i,j})`; `Xh[i,j]`, `Ch[..]` go through `π` first.
    Sigma,
    /// `Xh[i,j]`, `Ch[..] -> σ̂(..)`; `x[i,j]` has no image.
    SigmaHat,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EvalOptions {
    pub model: Model,
    /// `None` uses `σ` for `x[i,j]` and `σ̂` for `Xh`, `Ch`.
    pub images: Option<Images>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    A(AElem),
    Sl2(Sl2Vec),
    Loop(LElem),
    LoopHat(LHatElem),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => f.write_str(&render_scalar(s)),
            Value::A(a) => write!(f, "{a}"),
            Value::Sl2(v) => write!(f, "{v}"),
            Value::Loop(u) => write!(f, "{u}"),
            Value::LoopHat(u) => write!(f, "{u}"),
        }
    }
}

fn mismatch(pos: usize, what: &str, a: Ty, b: Ty) -> ExprError {
    ExprError::Type {
        pos,
        message: format!("cannot {what} {a} and {b}"),
    }
}

/// Static type of a node; rejects ill-typed trees.
pub fn type_of(node: &Node) -> Result<Ty, ExprError> {
    let pos = node.pos;
    Ok(match &node.kind {
        Kind::Rational(_) => Ty::Scalar,
        Kind::Symbol(s) => s.ty(),
        Kind::Gen(_) => Ty::Lie,
        Kind::Neg(e) => type_of(e)?,
        Kind::Add(a, b) | Kind::Sub(a, b) => match (type_of(a)?, type_of(b)?) {
            (x, y) if x == y => x,
            (Ty::Scalar, Ty::A) | (Ty::A, Ty::Scalar) => Ty::A,
            (x, y) => return Err(mismatch(pos, "add", x, y)),
        },
        Kind::Mul(a, b) => match (type_of(a)?, type_of(b)?) {
            (Ty::Scalar, y) => y,
            (x, Ty::Scalar) => x,
            (Ty::A, Ty::A) => Ty::A,
            (x, y) => {
                return Err(ExprError::Type {
                    pos,
                    message: format!("cannot multiply {x} and {y}; write tensors as T(sl2, a)"),
                })
            }
        },
        Kind::Pow(e, _) => match type_of(e)? {
            t @ (Ty::Scalar | Ty::A) => t,
            t => {
                return Err(ExprError::Type {
                    pos,
                    message: format!("cannot raise {t} to a power"),
                })
            }
        },
        Kind::Bracket(a, b) => match (type_of(a)?, type_of(b)?) {
            (Ty::Lie, Ty::Lie) => Ty::Lie,
            (Ty::Sl2, Ty::Sl2) => Ty::Sl2,
            (x, y) => {
                return Err(ExprError::Type {
                    pos,
                    message: format!("bracket needs two Lie elements, found {x} and {y}"),
                })
            }
        },
        Kind::Tensor(a, b) => match (type_of(a)?, type_of(b)?) {
            (Ty::Sl2, Ty::A | Ty::Scalar) => Ty::Lie,
            (x, y) => {
                return Err(ExprError::Type {
                    pos,
                    message: format!(
                        "T(.., ..) needs an sl2 element and an element of A, found {x} and {y}"
                    ),
                })
            }
        },
    })
}

/// Intermediate values; Lie elements live in `L̂` until the end.
enum V {
    S(Scalar),
    A(AElem),
    Sl2(Sl2Vec),
    Lie(LHatElem),
}

impl V {
    fn into_a(self) -> AElem {
        match self {
            V::S(s) => AElem::constant(s),
            V::A(a) => a,
            _ => unreachable!("type checked"),
        }
    }
}

fn symbol_value(s: Symbol, pos: usize, opts: &EvalOptions) -> Result<V, ExprError> {
    let central = |c: CentralVec| {
        if opts.model == Model::L {
            Err(ExprError::Eval {
                pos,
                message: "central elements are not in L; use --model lhat".into(),
            })
        } else {
            Ok(V::Lie(c.into()))
        }
    };
    Ok(match s {
        Symbol::T => V::A(AElem::t()),
        Symbol::TPrime => V::A(AElem::t_prime()),
        Symbol::TDoublePrime => V::A(AElem::t_double_prime()),
        Symbol::X => V::Sl2(Sl2Vec::basis(Equitable::X)),
        Symbol::Y => V::Sl2(Sl2Vec::basis(Equitable::Y)),
        Symbol::Z => V::Sl2(Sl2Vec::basis(Equitable::Z)),
        Symbol::C => central(CentralVec::c())?,
        Symbol::CPrime => central(CentralVec::c_prime())?,
        Symbol::CDoublePrime => central(CentralVec::c_double_prime())?,
    })
}

fn generator_value(g: Generator, pos: usize, opts: &EvalOptions) -> Result<LHatElem, ExprError> {
    match (g, opts.images) {
        (Generator::Box(b), None | Some(Images::Sigma)) => Ok(sigma(b).into()),
        (Generator::Box(b), Some(Images::SigmaHat)) => Err(ExprError::Eval {
            pos,
            message: format!("{b} has no image under sigma-hat; use Xh[{},{}]", b.i, b.j),
        }),
        (Generator::Hat(h), Some(Images::Sigma)) => Ok(sigma_after_pi(h).into()),
        (Generator::Hat(h), None | Some(Images::SigmaHat)) => Ok(sigma_hat(h)),
    }
}

fn pow(base: V, k: i64, pos: usize) -> Result<V, ExprError> {
    let fail = |what: String| ExprError::Eval { pos, message: what };
    match base {
        V::S(s) => {
            if s.is_zero() && k < 0 {
                return Err(fail("0 has no inverse".into()));
            }
            let e = i32::try_from(k).map_err(|_| fail(format!("exponent {k} is too large")))?;
            Ok(V::S(num_traits::Pow::pow(&s, e)))
        }
        V::A(a) => a.pow(k).map(V::A).ok_or_else(|| {
            fail(format!(
                "{a} is not a unit of A, so it has no negative powers"
            ))
        }),
        _ => unreachable!("type checked"),
    }
}

fn eval_node(node: &Node, opts: &EvalOptions) -> Result<V, ExprError> {
    let pos = node.pos;
    Ok(match &node.kind {
        Kind::Rational(q) => V::S(q.clone()),
        Kind::Symbol(s) => symbol_value(*s, pos, opts)?,
        Kind::Gen(g) => V::Lie(generator_value(*g, pos, opts)?),
        Kind::Neg(e) => match eval_node(e, opts)? {
            V::S(s) => V::S(-s),
            V::A(a) => V::A(-a),
            V::Sl2(v) => V::Sl2(-&v),
            V::Lie(u) => V::Lie(-&u),
        },
        Kind::Add(a, b) | Kind::Sub(a, b) => {
            let sign = if matches!(node.kind, Kind::Sub(..)) {
                -Scalar::one()
            } else {
                Scalar::one()
            };
            match (eval_node(a, opts)?, eval_node(b, opts)?) {
                (V::S(x), V::S(y)) => V::S(x + y * sign),
                (V::Sl2(x), V::Sl2(y)) => V::Sl2(&x + &y.scale(&sign)),
                (V::Lie(x), V::Lie(y)) => V::Lie(&x + &y.scale(&sign)),
                (x, y) => V::A(&x.into_a() + &y.into_a().scale(&sign)),
            }
        }
        Kind::Mul(a, b) => match (eval_node(a, opts)?, eval_node(b, opts)?) {
            (V::S(x), V::S(y)) => V::S(x * y),
            (V::S(s), V::A(v)) | (V::A(v), V::S(s)) => V::A(v.scale(&s)),
            (V::S(s), V::Sl2(v)) | (V::Sl2(v), V::S(s)) => V::Sl2(v.scale(&s)),
            (V::S(s), V::Lie(v)) | (V::Lie(v), V::S(s)) => V::Lie(v.scale(&s)),
            (V::A(x), V::A(y)) => V::A(&x * &y),
            _ => unreachable!("type checked"),
        },
        Kind::Pow(e, k) => pow(eval_node(e, opts)?, *k, pos)?,
        Kind::Bracket(a, b) => match (eval_node(a, opts)?, eval_node(b, opts)?) {
            (V::Lie(x), V::Lie(y)) => V::Lie(x.bracket(&y)),
            (V::Sl2(x), V::Sl2(y)) => V::Sl2(x.bracket(&y)),
            _ => unreachable!("type checked"),
        },
        Kind::Tensor(a, b) => {
            let V::Sl2(v) = eval_node(a, opts)? else {
                unreachable!("type checked")
            };
            let coeff = eval_node(b, opts)?.into_a();
            V::Lie(LHatElem::tensor(&v, &coeff))
        }
    })
}

/// Evaluates a type-checked tree exactly. In model `L` the result is
/// projected by `π`, which is a homomorphism, so brackets agree with `L`.
pub fn evaluate(node: &Node, opts: &EvalOptions) -> Result<Value, ExprError> {
    type_of(node)?;
    Ok(match eval_node(node, opts)? {
        V::S(s) => Value::Scalar(s),
        V::A(a) => Value::A(a),
        V::Sl2(v) => Value::Sl2(v),
        V::Lie(u) => match opts.model {
            Model::L => Value::Loop(pi_projection(&u)),
            Model::LHat => Value::LoopHat(u),
        },
    })
}
