use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::{Case, LevelState};
use crate::cf::CFExpansion;
use crate::error::{Error, Result};

/// Which interval rule produced a Λ element: the six general-slope cases,
/// or the level-1 (iii) boundary rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LambdaTag {
    General(u8),
    LevelOne,
}

impl LambdaTag {
    /// Golden-ratio numbering: Λ′_l is general case l+2.
    pub fn golden(self) -> Option<u8> {
        match self {
            LambdaTag::General(l) if l >= 3 => Some(l - 2),
            _ => None,
        }
    }
}

impl fmt::Display for LambdaTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaTag::General(l) => write!(f, "L{l}"),
            LambdaTag::LevelOne => f.write_str("L1iii"),
        }
    }
}

/// `Σ c·q_{level+off} + [w]·|W_level| − 1`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    pub level: usize,
    pub terms: Vec<(i8, u64)>,
    pub with_w: bool,
}

impl Form {
    /// u_{t,k} = t q_k + q_{k−1} − 1, plus |W_k| when `with_w` (v_{t,k})
    fn uv(t: u64, k: usize, with_w: bool) -> Form {
        Form {
            level: k,
            terms: vec![(0, t), (-1, 1)],
            with_w,
        }
    }

    /// u′_k = q_{k+1} − 1, plus |W_k| when `with_w` (v′_k)
    fn prime(k: usize, with_w: bool) -> Form {
        Form {
            level: k,
            terms: vec![(1, 1)],
            with_w,
        }
    }

    pub fn eval(&self, q: &[BigUint], w: &[BigUint]) -> BigUint {
        let mut n = BigUint::from(0u32);
        for &(off, c) in &self.terms {
            n += &q[(self.level as isize + off as isize) as usize] * c;
        }
        if self.with_w {
            n += &w[self.level];
        }
        n - BigUint::one()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormElement {
    pub form: Form,
    pub tag: LambdaTag,
}

/// Λ element forms on the covered stretch, plus the level `k*` such that the
/// stretch is `[u_{1,1}, u_{1,k*} − 1]`.
#[derive(Clone, Debug)]
pub struct FormPlan {
    pub elements: Vec<FormElement>,
    pub start: usize,
    pub end_level: usize,
}

/// Walk the chain (levels 1..=len) applying the interval rules.
///
/// `a(k)` supplies partial quotients and `t(k)` the multiplicities of
/// (i)→(i)/(ii) steps.
pub fn lambda_forms(
    cases: &[Case],
    t: &BTreeMap<usize, u64>,
    a: impl Fn(usize) -> u64,
    start: usize,
) -> Result<FormPlan> {
    let n = cases.len();
    let case = |k: usize| cases[k - 1];
    let mut out = Vec::new();
    let mut k = start;
    let push = |out: &mut Vec<FormElement>, tag: LambdaTag, forms: Vec<Form>| {
        out.extend(forms.into_iter().map(|form| FormElement { form, tag }));
    };
    if start == 1 && n >= 1 && case(1) == Case::III {
        if n < 2 {
            return Ok(FormPlan {
                elements: out,
                start,
                end_level: 1,
            });
        }
        let head = Form {
            level: 1,
            terms: vec![(0, 1)],
            with_w: true,
        };
        let forms = if case(2) == Case::I {
            vec![head, Form::prime(1, false)]
        } else {
            vec![head]
        };
        push(&mut out, LambdaTag::LevelOne, forms);
        k = 2;
    }
    loop {
        if k > n {
            break;
        }
        match case(k) {
            Case::I => {
                if k + 1 > n {
                    break;
                }
                match case(k + 1) {
                    next @ (Case::I | Case::II) => {
                        let tk = *t
                            .get(&k)
                            .ok_or_else(|| Error::Domain(format!("missing t at level {k}")))?;
                        let mut forms = vec![Form::uv(tk, k, true)];
                        if next == Case::I {
                            if tk + 1 < a(k + 1) {
                                forms.push(Form::uv(tk + 1, k, false));
                                forms.push(Form::uv(tk + 1, k, true));
                            }
                            forms.push(Form::prime(k, false));
                            push(&mut out, LambdaTag::General(1), forms);
                        } else {
                            forms.push(Form::uv(tk + 1, k, false));
                            forms.push(Form::uv(tk + 1, k, true));
                            push(&mut out, LambdaTag::General(2), forms);
                        }
                        k += 1;
                    }
                    Case::III => {
                        if k + 2 > n {
                            break;
                        }
                        match case(k + 2) {
                            Case::I => push(
                                &mut out,
                                LambdaTag::General(3),
                                vec![Form::prime(k, true), Form::prime(k + 1, false)],
                            ),
                            Case::II => push(&mut out, LambdaTag::General(4), vec![Form::prime(k, true)]),
                            Case::III => {
                                return Err(Error::InvalidTransition {
                                    k: k + 1,
                                    from: "iii".into(),
                                    to: "iii".into(),
                                })
                            }
                        }
                        k += 2;
                    }
                }
            }
            Case::II => {
                if k + 1 > n {
                    break;
                }
                match case(k + 1) {
                    Case::I => {
                        let forms = if a(k + 1) == 1 {
                            vec![Form::uv(1, k, false)]
                        } else {
                            vec![Form::uv(1, k, false), Form::uv(1, k, true), Form::prime(k, false)]
                        };
                        push(&mut out, LambdaTag::General(5), forms);
                    }
                    Case::II => push(
                        &mut out,
                        LambdaTag::General(6),
                        vec![Form::uv(1, k, false), Form::uv(1, k, true)],
                    ),
                    Case::III => {
                        return Err(Error::InvalidTransition {
                            k,
                            from: "ii".into(),
                            to: "iii".into(),
                        })
                    }
                }
                k += 1;
            }
            Case::III => {
                return Err(Error::Consistency {
                    k,
                    msg: "(iii) not preceded by (i)".into(),
                });
            }
        }
    }
    Ok(FormPlan {
        elements: out,
        start,
        end_level: k,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedElement {
    #[serde(serialize_with = "crate::serde_util::biguint_str")]
    pub n: BigUint,
    pub tag: LambdaTag,
    pub level: usize,
}

/// Λ(x) ∩ [lo, hi], exactly, as implied by the level states.
#[derive(Clone, Debug, Serialize)]
pub struct PredictedLambda {
    pub elements: Vec<PredictedElement>,
    #[serde(serialize_with = "crate::serde_util::biguint_str")]
    pub lo: BigUint,
    #[serde(serialize_with = "crate::serde_util::biguint_str")]
    pub hi: BigUint,
}

impl PredictedLambda {
    pub fn values(&self) -> Vec<BigUint> {
        self.elements.iter().map(|e| e.n.clone()).collect()
    }
}

/// Predict Λ from level states 1..=K. Coincident values keep the earlier tag.
pub fn predict_lambda(states: &[LevelState], cf: &CFExpansion) -> Result<PredictedLambda> {
    if states.is_empty() {
        return Err(Error::InsufficientData("no level states".into()));
    }
    for (i, s) in states.iter().enumerate() {
        if s.k != i + 1 {
            return Err(Error::Consistency {
                k: i + 1,
                msg: "level states must start at 1 and be contiguous".into(),
            });
        }
    }
    let n = states.len();
    let cases: Vec<Case> = states.iter().map(|s| s.case).collect();
    let t: BTreeMap<usize, u64> = states.iter().filter_map(|s| s.t.map(|t| (s.k, t))).collect();
    let a = cf.quotient_vec(n + 1)?;
    let plan = lambda_forms(&cases, &t, |k| a[k], 1)?;
    let q = cf.denominators(n + 2)?;
    let mut w = vec![BigUint::from(0u32)];
    w.extend(states.iter().map(|s| s.w_len.clone()));

    let mut elements: Vec<PredictedElement> = plan
        .elements
        .iter()
        .map(|e| PredictedElement {
            n: e.form.eval(&q, &w),
            tag: e.tag,
            level: e.form.level,
        })
        .collect();
    elements.sort_by(|x, y| x.n.cmp(&y.n));
    elements.dedup_by(|later, earlier| later.n == earlier.n);

    let lo = &q[1] + &q[0] - BigUint::one();
    let hi = Form::uv(1, plan.end_level, false).eval(&q, &w) - BigUint::one();
    elements.retain(|e| e.n >= lo && e.n <= hi);
    Ok(PredictedLambda { elements, lo, hi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{states_from_chain, GoldenChain};

    fn predict(lit: &str, levels: usize) -> Vec<u64> {
        let cf = CFExpansion::golden();
        let chain = lit.parse::<GoldenChain>().unwrap().chain(levels).unwrap();
        let states = states_from_chain(&cf, &chain).unwrap();
        predict_lambda(&states, &cf)
            .unwrap()
            .values()
            .iter()
            .map(|n| n.try_into().unwrap())
            .collect()
    }

    #[test]
    fn characteristic_lambda() {
        // {q_k − 1 : k ≥ 2}
        assert_eq!(predict("(b)", 8), vec![1, 2, 4, 7, 12, 20, 33]);
    }

    #[test]
    fn shifted_characteristic_lambda() {
        // {|W_k| + q_{k+1} − 1, q_{k+2} − 1} for odd k, |W_k| = 1
        assert_eq!(predict("(a)", 9), vec![2, 5, 7, 13, 20, 34, 54]);
    }

    #[test]
    fn golden_tags() {
        assert_eq!(LambdaTag::General(4).golden(), Some(2));
        assert_eq!(LambdaTag::General(5).golden(), Some(3));
        assert_eq!(LambdaTag::General(1).golden(), None);
    }
}
