//! Transform sequences that normalize monomial divisibility.
//!
//! [`make_divisible`] produces a sequence of primitive monoidal transforms
//! after which the first monomial divides the second exponentwise. The
//! strategy has two phases:
//!
//! 1. *Stratify.* For each level (leading nonzero row of a value column),
//!    run a subtractive Euclidean loop dividing the lex-largest same-level
//!    parameter by the lex-smallest until a single parameter remains at the
//!    level. Unimodularity forces its leading entry to 1, and columns only
//!    ever move to deeper levels, so after one sweep every level holds
//!    exactly one parameter.
//! 2. *Clear deficits.* In a stratified frame the exponent difference of the
//!    two monomials is explicit; wherever the divisor has surplus exponent,
//!    divide the most significant surplus parameter by the deficit parameter
//!    until the deficit is gone, working from the most significant deficit
//!    down. Every transform rewrites both monomials, so values never change.
//!
//! Both phases terminate on any valid input; the step budget guards against
//! pathological magnitudes rather than nontermination. The certificate is
//! checked after construction: an incomplete run surfaces as
//! [`BlowupError::BudgetExceeded`], never as a wrong answer.

use num_bigint::BigInt;
use num_traits::One;

use crate::frame::{BlowupError, DivisionTrace, Frame, Monomial, PmtStep};

/// Default transform budget for the divisibility routines.
pub const DEFAULT_PMT_BUDGET: usize = 10_000;

/// Result of [`make_divisible`]: replaying `steps` from the inputs
/// reproduces `frame`, `m1` and `m2` exactly.
#[derive(Debug, Clone)]
pub struct DivisionOutcome {
    pub steps: Vec<PmtStep>,
    pub frame: Frame,
    pub m1: Monomial,
    pub m2: Monomial,
}

/// Result of [`reduce_fraction_supports`]: after replaying `steps`, the
/// designated minimal denominator monomial divides every listed monomial and
/// the designated minimal numerator divides every numerator.
#[derive(Debug, Clone)]
pub struct FractionCertificate {
    pub steps: Vec<PmtStep>,
    pub frame: Frame,
    pub e: BigInt,
    pub numerators: Vec<Monomial>,
    pub denominators: Vec<Monomial>,
    /// Index into `numerators` of the lex-minimal-value numerator.
    pub m1_index: usize,
    /// Index into `denominators` of the lex-minimal-value denominator.
    pub n1_index: usize,
}

struct Workspace {
    frame: Frame,
    monomials: Vec<Monomial>,
    steps: Vec<PmtStep>,
    budget: usize,
}

impl Workspace {
    fn new(frame: Frame, monomials: Vec<Monomial>, budget: usize) -> Self {
        Workspace {
            frame,
            monomials,
            steps: Vec::new(),
            budget,
        }
    }

    fn apply(&mut self, i: usize, j: usize) -> Result<(), BlowupError> {
        if self.steps.len() >= self.budget {
            return Err(BlowupError::BudgetExceeded {
                budget: self.budget,
                trace: Box::new(DivisionTrace {
                    steps: self.steps.clone(),
                    frame: self.frame.clone(),
                    monomials: self.monomials.clone(),
                }),
            });
        }
        let step = PmtStep { i, j };
        let (frame, monomials) = self.frame.pmt_rewriting(&step, &self.monomials)?;
        self.frame = frame;
        self.monomials = monomials;
        self.steps.push(step);
        Ok(())
    }

    fn level(&self, k: usize) -> usize {
        self.frame.values()[k]
            .leading_index()
            .expect("frame columns are nonzero")
    }

    /// Phase 1: reduce every level to a single parameter.
    fn stratify(&mut self) -> Result<(), BlowupError> {
        let n = self.frame.n();
        for level in 0..n {
            loop {
                let members: Vec<usize> = (0..n).filter(|&k| self.level(k) == level).collect();
                if members.len() < 2 {
                    break;
                }
                let &i = members
                    .iter()
                    .min_by(|&&a, &&b| self.frame.values()[a].cmp(&self.frame.values()[b]))
                    .expect("nonempty");
                let &j = members
                    .iter()
                    .max_by(|&&a, &&b| self.frame.values()[a].cmp(&self.frame.values()[b]))
                    .expect("nonempty");
                self.apply(i + 1, j + 1)?;
            }
        }
        debug_assert!({
            let mut levels: Vec<usize> = (0..n).map(|k| self.level(k)).collect();
            levels.sort_unstable();
            levels == (0..n).collect::<Vec<_>>()
        });
        Ok(())
    }

    /// Phase 2: make monomial `src` divide monomial `dst`. The frame must be
    /// stratified and `value(src) <= value(dst)`.
    fn clear_deficits(&mut self, src: usize, dst: usize) -> Result<(), BlowupError> {
        let n = self.frame.n();
        loop {
            let deficit = (0..n)
                .filter(|&k| self.monomials[src].exps()[k] > self.monomials[dst].exps()[k])
                .min_by_key(|&k| self.level(k));
            let Some(k) = deficit else {
                return Ok(());
            };
            let lk = self.level(k);
            let surplus = (0..n)
                .filter(|&t| {
                    self.level(t) < lk
                        && self.monomials[dst].exps()[t] > self.monomials[src].exps()[t]
                })
                .min_by_key(|&t| self.level(t))
                .expect("a nonnegative value difference has a more significant surplus");
            while self.monomials[src].exps()[k] > self.monomials[dst].exps()[k] {
                self.apply(k + 1, surplus + 1)?;
            }
        }
    }
}

fn validate_lengths(frame: &Frame, ms: &[&Monomial]) -> Result<(), BlowupError> {
    for m in ms {
        if m.len() != frame.n() {
            return Err(BlowupError::LengthMismatch(format!(
                "monomial has {} exponents for a frame of {} parameters",
                m.len(),
                frame.n()
            )));
        }
    }
    Ok(())
}

/// Finds a transform sequence after which `m1` divides `m2` exponentwise,
/// rewriting both monomials along the way. Requires
/// `value(m1) <= value(m2)` and a positive step budget.
pub fn make_divisible(
    frame: &Frame,
    m1: &Monomial,
    m2: &Monomial,
    budget: usize,
) -> Result<DivisionOutcome, BlowupError> {
    validate_lengths(frame, &[m1, m2])?;
    if budget == 0 {
        return Err(BlowupError::PreconditionViolated(
            "budget must be positive".into(),
        ));
    }
    let v1 = frame.value_of(m1);
    let v2 = frame.value_of(m2);
    if v1 > v2 {
        return Err(BlowupError::PreconditionViolated(format!(
            "value {v1} of the divisor exceeds value {v2} of the dividend"
        )));
    }
    if m1.divides(m2) {
        return Ok(DivisionOutcome {
            steps: Vec::new(),
            frame: frame.clone(),
            m1: m1.clone(),
            m2: m2.clone(),
        });
    }
    let mut ws = Workspace::new(frame.clone(), vec![m1.clone(), m2.clone()], budget);
    ws.stratify()?;
    ws.clear_deficits(0, 1)?;
    assert!(ws.monomials[0].divides(&ws.monomials[1]));
    let mut monomials = ws.monomials.into_iter();
    Ok(DivisionOutcome {
        steps: ws.steps,
        frame: ws.frame,
        m1: monomials.next().unwrap(),
        m2: monomials.next().unwrap(),
    })
}

/// Normalizes the monomial supports of a fraction: after the returned
/// transform sequence the minimal denominator `N1` divides every
/// denominator and every numerator, and the minimal numerator `M1` divides
/// every numerator.
///
/// `e` is the ramification scale of the ambient relation and is carried into
/// the certificate unchanged; the monomials are understood up to unit.
/// Requires `value(N1) <= value(M1)`.
pub fn reduce_fraction_supports(
    frame: &Frame,
    e: &BigInt,
    numerators: &[Monomial],
    denominators: &[Monomial],
    budget: usize,
) -> Result<FractionCertificate, BlowupError> {
    if numerators.is_empty() || denominators.is_empty() {
        return Err(BlowupError::PreconditionViolated(
            "numerator and denominator lists must be nonempty".into(),
        ));
    }
    if e < &BigInt::one() {
        return Err(BlowupError::PreconditionViolated(
            "e must be positive".into(),
        ));
    }
    let all: Vec<&Monomial> = numerators.iter().chain(denominators).collect();
    validate_lengths(frame, &all)?;
    if budget == 0 {
        return Err(BlowupError::PreconditionViolated(
            "budget must be positive".into(),
        ));
    }

    let argmin = |ms: &[Monomial]| -> usize {
        (0..ms.len())
            .min_by(|&a, &b| frame.value_of(&ms[a]).cmp(&frame.value_of(&ms[b])))
            .expect("nonempty")
    };
    let m1 = argmin(numerators);
    let n1 = argmin(denominators);
    if frame.value_of(&denominators[n1]) > frame.value_of(&numerators[m1]) {
        return Err(BlowupError::PreconditionViolated(format!(
            "value {} of the minimal denominator exceeds value {} of the minimal numerator",
            frame.value_of(&denominators[n1]),
            frame.value_of(&numerators[m1])
        )));
    }

    // Workspace layout: numerators first, then denominators.
    let t = numerators.len();
    let monomials: Vec<Monomial> = numerators.iter().chain(denominators).cloned().collect();
    let mut ws = Workspace::new(frame.clone(), monomials, budget);

    // (source, target) pairs to normalize; previously established
    // divisibilities survive later transforms since exponent differences
    // only ever gain nonnegative amounts.
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..denominators.len() {
        if j != n1 {
            pairs.push((t + n1, t + j));
        }
    }
    for i in 0..numerators.len() {
        pairs.push((t + n1, i));
    }
    for i in 0..numerators.len() {
        if i != m1 {
            pairs.push((m1, i));
        }
    }
    for (src, dst) in pairs {
        if ws.monomials[src].divides(&ws.monomials[dst]) {
            continue;
        }
        ws.stratify()?;
        ws.clear_deficits(src, dst)?;
    }

    for j in 0..denominators.len() {
        assert!(ws.monomials[t + n1].divides(&ws.monomials[t + j]));
    }
    for i in 0..numerators.len() {
        assert!(ws.monomials[t + n1].divides(&ws.monomials[i]));
        assert!(ws.monomials[m1].divides(&ws.monomials[i]));
    }
    let nums = ws.monomials[..t].to_vec();
    let dens = ws.monomials[t..].to_vec();
    Ok(FractionCertificate {
        steps: ws.steps,
        frame: ws.frame,
        e: e.clone(),
        numerators: nums,
        denominators: dens,
        m1_index: m1,
        n1_index: n1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn frame(cols: &[&[i64]]) -> Frame {
        Frame::from_i64_columns(cols).unwrap()
    }

    fn replay(frame: &Frame, monomials: &[Monomial], steps: &[PmtStep]) -> (Frame, Vec<Monomial>) {
        let mut f = frame.clone();
        let mut ms = monomials.to_vec();
        for s in steps {
            let (nf, nms) = f.pmt_rewriting(s, &ms).unwrap();
            f = nf;
            ms = nms;
        }
        (f, ms)
    }

    #[test]
    fn equal_monomials_need_no_steps() {
        let f = Frame::identity(2);
        let m = Monomial::from_u64s(&[1, 2]);
        let out = make_divisible(&f, &m, &m, 10).unwrap();
        assert!(out.steps.is_empty());
    }

    #[test]
    fn rank_one_is_plain_divisibility() {
        let f = Frame::identity(1);
        let out = make_divisible(
            &f,
            &Monomial::from_u64s(&[2]),
            &Monomial::from_u64s(&[5]),
            10,
        )
        .unwrap();
        assert!(out.steps.is_empty());
    }

    #[test]
    fn worked_rank_two_instance() {
        // nu(x1) = (0,1), nu(x2) = (1,0), M1 = x1^2, M2 = x2.
        let f = frame(&[&[0, 1], &[1, 0]]);
        let m1 = Monomial::from_u64s(&[2, 0]);
        let m2 = Monomial::from_u64s(&[0, 1]);
        let out = make_divisible(&f, &m1, &m2, DEFAULT_PMT_BUDGET).unwrap();
        assert_eq!(
            out.steps,
            vec![PmtStep { i: 1, j: 2 }, PmtStep { i: 1, j: 2 }]
        );
        assert!(out.m1.divides(&out.m2));
        assert_eq!(out.m2, Monomial::from_u64s(&[2, 1]));
        // BFS confirms a two-step certificate exists and none shorter.
        let shortest = oracle::pmt_bfs(&f, &m1, &m2, 8).unwrap();
        assert_eq!(shortest.len(), 2);
        assert_eq!(oracle::pmt_bfs(&f, &m1, &m2, 1), None);
        // Replay reproduces the outcome bit for bit.
        let (rf, rms) = replay(&f, &[m1, m2], &out.steps);
        assert_eq!(rf, out.frame);
        assert_eq!(rms, vec![out.m1, out.m2]);
    }

    #[test]
    fn value_order_precondition_is_checked() {
        let f = frame(&[&[0, 1], &[1, 0]]);
        let err = make_divisible(
            &f,
            &Monomial::from_u64s(&[0, 1]),
            &Monomial::from_u64s(&[2, 0]),
            10,
        )
        .unwrap_err();
        assert!(matches!(err, BlowupError::PreconditionViolated(_)));
    }

    #[test]
    fn budget_exhaustion_carries_a_trace() {
        let f = frame(&[&[0, 1], &[1, 0]]);
        let m1 = Monomial::from_u64s(&[2, 0]);
        let m2 = Monomial::from_u64s(&[0, 1]);
        let err = make_divisible(&f, &m1, &m2, 1).unwrap_err();
        match err {
            BlowupError::BudgetExceeded { budget, trace } => {
                assert_eq!(budget, 1);
                assert_eq!(trace.steps.len(), 1);
                // The partial trace replays.
                let (rf, _) = replay(&f, &[m1, m2], &trace.steps);
                assert_eq!(rf, trace.frame);
            }
            other => panic!("expected BudgetExceeded, got {other:?}"),
        }
    }

    #[test]
    fn values_are_conserved_and_difference_is_invariant() {
        let f = frame(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        let m1 = Monomial::from_u64s(&[1, 2, 0]);
        let m2 = Monomial::from_u64s(&[0, 1, 4]);
        let (v1, v2) = (f.value_of(&m1), f.value_of(&m2));
        let (lo, hi, swap) = if v1 <= v2 {
            (m1, m2, false)
        } else {
            (m2, m1, true)
        };
        let _ = swap;
        let diff = &f.value_of(&hi) - &f.value_of(&lo);
        let out = make_divisible(&f, &lo, &hi, DEFAULT_PMT_BUDGET).unwrap();
        assert_eq!(out.frame.value_of(&out.m1), f.value_of(&lo));
        assert_eq!(out.frame.value_of(&out.m2), f.value_of(&hi));
        assert_eq!(
            &out.frame.value_of(&out.m2) - &out.frame.value_of(&out.m1),
            diff
        );
    }

    #[test]
    fn fraction_support_trivial_cases() {
        let f = Frame::identity(2);
        let ms = [Monomial::from_u64s(&[1, 1])];
        let cert = reduce_fraction_supports(&f, &BigInt::one(), &ms, &ms, 10).unwrap();
        assert!(cert.steps.is_empty());

        // On a line everything already divides.
        let f1 = Frame::identity(1);
        let cert = reduce_fraction_supports(
            &f1,
            &BigInt::one(),
            &[Monomial::from_u64s(&[3]), Monomial::from_u64s(&[5])],
            &[Monomial::from_u64s(&[2]), Monomial::from_u64s(&[4])],
            10,
        )
        .unwrap();
        assert!(cert.steps.is_empty());
        assert_eq!(cert.n1_index, 0);
        assert_eq!(cert.m1_index, 0);
    }

    #[test]
    fn fraction_support_worked_instance() {
        // Same two transforms as the divisibility example: Ms = [x2],
        // Ns = [x1^2], e = 2.
        let f = frame(&[&[0, 1], &[1, 0]]);
        let cert = reduce_fraction_supports(
            &f,
            &BigInt::from(2),
            &[Monomial::from_u64s(&[0, 1])],
            &[Monomial::from_u64s(&[2, 0])],
            DEFAULT_PMT_BUDGET,
        )
        .unwrap();
        assert_eq!(
            cert.steps,
            vec![PmtStep { i: 1, j: 2 }, PmtStep { i: 1, j: 2 }]
        );
        assert!(cert.denominators[0].divides(&cert.numerators[0]));
        assert_eq!(cert.e, BigInt::from(2));
    }

    #[test]
    fn fraction_support_checks_value_precondition() {
        let f = frame(&[&[0, 1], &[1, 0]]);
        let err = reduce_fraction_supports(
            &f,
            &BigInt::one(),
            &[Monomial::from_u64s(&[1, 0])],
            &[Monomial::from_u64s(&[0, 1])],
            10,
        )
        .unwrap_err();
        assert!(matches!(err, BlowupError::PreconditionViolated(_)));
    }
}
