//! The descending-diagram skein evaluator.
//!
//! Components are traversed in order from base points. The first crossing
//! met as an under-pass is resolved by the skein relation: a positive
//! crossing `D` expands as `x^2 D_switched + x(s - s^-1) D_smoothed`, a
//! negative one as `x^-2 D_switched - x^-1(s - s^-1) D_smoothed`. Switching
//! advances the first bad index at equal crossing count and smoothing drops
//! a crossing, so the recursion terminates. A fully descending diagram
//! splits: a component of winding `w` and self-writhe `r` contributes
//! `(x v^-1)^(r - r0(w)) A_w`, with `r0(w) = sign(w)(|w|-1)` the writhe of
//! the standard diagram; a winding-0 component contributes
//! `delta (x v^-1)^r`. Curls are erased before branching.

use std::collections::BTreeMap;
use std::collections::HashMap;

use crate::error::{Result, SkeinError};
use crate::scalar::Scalar;

use super::tangle::{Tangle, Target};

/// Raw coordinates: sorted monomial index list plus an optional arc winding.
pub type RawKey = (Vec<i64>, Option<i64>);

/// Raw skein coordinates produced by the evaluator.
pub type RawElement = BTreeMap<RawKey, Scalar>;

pub fn raw_add(acc: &mut RawElement, key: RawKey, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = &*e.get() + c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

pub fn raw_scale(el: &RawElement, c: &Scalar) -> RawElement {
    if c.is_zero() {
        return RawElement::new();
    }
    el.iter().map(|(k, v)| (k.clone(), v * c)).collect()
}

/// Writhe of the standard closed diagram of `A_w`.
pub fn standard_writhe(w: i64) -> i64 {
    if w == 0 {
        0
    } else {
        w.signum() * (w.abs() - 1)
    }
}

/// Writhe of the standard arc diagram with winding `w` (the negative family
/// carries one extra negative curl so that capping with the straight segment
/// matches the closed standard diagrams).
pub fn standard_arc_writhe(w: i64) -> i64 {
    if w >= 1 {
        w - 1
    } else {
        w
    }
}

/// One passage of a traversal: arrival at a crossing on one of its strands.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Passage {
    xing: usize,
    strand: u8,
}

/// A traversal plan: per component, the ordered passages and the component's
/// winding; the arc component comes first when present.
#[derive(Clone, Debug)]
struct Traversal {
    /// (passages, winding, is_arc)
    components: Vec<(Vec<Passage>, i64, bool)>,
}

fn walk_from(t: &Tangle, start: Passage) -> (Vec<Passage>, i64) {
    let mut passages = vec![start];
    let mut winding = 0i64;
    let mut cur = start;
    loop {
        let x = t.xings[cur.xing].as_ref().expect("live crossing");
        let (target, seam) = x.out[cur.strand as usize];
        winding += seam;
        match target {
            Target::In(c, s) => {
                let next = Passage { xing: c, strand: s };
                if next == start {
                    return (passages, winding);
                }
                passages.push(next);
                cur = next;
            }
            Target::End => unreachable!("closed walk hit an endpoint"),
        }
    }
}

fn arc_walk(t: &Tangle) -> (Vec<Passage>, i64) {
    let mut passages = Vec::new();
    let mut winding = 0i64;
    let (mut target, mut seam) = t.arc.expect("relative diagram");
    loop {
        winding += seam;
        match target {
            Target::In(c, s) => {
                let p = Passage { xing: c, strand: s };
                passages.push(p);
                let x = t.xings[c].as_ref().expect("live crossing");
                let (nt, ns) = x.out[s as usize];
                target = nt;
                seam = ns;
            }
            Target::End => return (passages, winding),
        }
    }
}

/// Deterministic traversal: arc first, then closed components ordered by
/// their smallest in-port, each started at that port. Independent of the
/// over/under data, so a switched diagram reuses the same plan.
fn canonical_traversal(t: &Tangle) -> Traversal {
    let mut components = Vec::new();
    let mut visited: Vec<[bool; 2]> = vec![[false; 2]; t.xings.len()];
    if t.is_relative() {
        let (passages, winding) = arc_walk(t);
        for p in &passages {
            visited[p.xing][p.strand as usize] = true;
        }
        components.push((passages, winding, true));
    }
    for c in 0..t.xings.len() {
        if t.xings[c].is_none() {
            continue;
        }
        for s in 0..2u8 {
            if visited[c][s as usize] {
                continue;
            }
            let (passages, winding) = walk_from(t, Passage { xing: c, strand: s });
            for p in &passages {
                visited[p.xing][p.strand as usize] = true;
            }
            components.push((passages, winding, false));
        }
    }
    components.sort_by_key(|(passages, _, is_arc)| {
        (
            !*is_arc,
            passages.iter().map(|p| (p.xing, p.strand)).min(),
        )
    });
    Traversal { components }
}

/// Randomized traversal for well-definedness tests: random component order
/// and random base points.
fn random_traversal(t: &Tangle, rng: &mut impl FnMut(usize) -> usize) -> Traversal {
    let mut plan = canonical_traversal(t);
    // rotate each closed component to a random base point
    for (passages, _, is_arc) in plan.components.iter_mut() {
        if *is_arc || passages.is_empty() {
            continue;
        }
        let k = rng(passages.len());
        passages.rotate_left(k);
    }
    // shuffle the closed components (arc stays first)
    let first_closed = if t.is_relative() { 1 } else { 0 };
    let m = plan.components.len();
    for i in (first_closed + 1..m).rev() {
        let j = first_closed + rng(i + 1 - first_closed);
        plan.components.swap(i, j);
    }
    plan
}

pub struct Evaluator {
    memo: HashMap<Vec<i64>, RawElement>,
    rng: Option<Box<dyn FnMut(usize) -> usize>>,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator {
            memo: HashMap::new(),
            rng: None,
        }
    }
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Evaluator whose traversal choices are randomized through the given
    /// source of indices (`rng(k)` must return a value in `0..k`).
    pub fn with_random_order(rng: Box<dyn FnMut(usize) -> usize>) -> Self {
        Evaluator {
            memo: HashMap::new(),
            rng: Some(rng),
        }
    }

    pub fn eval(&mut self, t: &Tangle) -> Result<RawElement> {
        let mut t = t.clone();
        let factor = strip_curls(&mut t)?;
        let inner = self.eval_stripped(&t, None)?;
        Ok(raw_scale(&inner, &factor))
    }

    /// Core recursion; `plan` is inherited along switch branches so the
    /// first-bad index strictly advances.
    fn eval_stripped(&mut self, t: &Tangle, plan: Option<&Traversal>) -> Result<RawElement> {
        let key = t.memo_key();
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let owned_plan;
        let plan = match plan {
            Some(p) => p,
            None => {
                owned_plan = match &mut self.rng {
                    Some(rng) => random_traversal(t, rng),
                    None => canonical_traversal(t),
                };
                &owned_plan
            }
        };
        // find the first passage meeting an unvisited crossing from below
        let mut first_visit: HashMap<usize, bool> = HashMap::new();
        let mut bad: Option<Passage> = None;
        'outer: for (passages, _, _) in &plan.components {
            for p in passages {
                if first_visit.contains_key(&p.xing) {
                    continue;
                }
                first_visit.insert(p.xing, true);
                let x = t.xings[p.xing].as_ref().unwrap();
                let over = (p.strand == 0) == x.over0;
                if !over {
                    bad = Some(*p);
                    break 'outer;
                }
            }
        }
        let result = match bad {
            None => terminal_value(t, plan),
            Some(p) => {
                let x = t.xings[p.xing].as_ref().unwrap();
                let positive = x.sign > 0;
                let switched = t.switch_crossing(p.xing);
                let sw_val = self.eval_stripped(&switched, Some(plan))?;
                let mut smoothed = t.delete_crossing(p.xing, true, 0);
                let sm_factor = strip_curls(&mut smoothed)?;
                let sm_val = raw_scale(&self.eval_stripped(&smoothed, None)?, &sm_factor);
                let (c_sw, c_sm) = if positive {
                    // D = x^2 D_sw + x(s - s^-1) D_sm
                    (
                        Scalar::monomial(2, 0, 0),
                        &Scalar::monomial(1, 0, 1) - &Scalar::monomial(1, 0, -1),
                    )
                } else {
                    // D = x^-2 D_sw - x^-1(s - s^-1) D_sm
                    (
                        Scalar::monomial(-2, 0, 0),
                        &(-&Scalar::monomial(-1, 0, 1)) + &Scalar::monomial(-1, 0, -1),
                    )
                };
                let mut out = raw_scale(&sw_val, &c_sw);
                for (k, v) in raw_scale(&sm_val, &c_sm) {
                    raw_add(&mut out, k, &v);
                }
                out
            }
        };
        self.memo.insert(key, result.clone());
        Ok(result)
    }
}

/// Erase seamless monogons, collecting the framing factor `(x v^-1)^sign`
/// per curl; crossing-free closed components move to the loop list.
fn strip_curls(t: &mut Tangle) -> Result<Scalar> {
    let mut factor = Scalar::one();
    'again: loop {
        for c in 0..t.xings.len() {
            let Some(x) = t.xings[c].as_ref() else {
                continue;
            };
            for s in 0..2usize {
                let (target, seam) = x.out[s];
                if target == Target::In(c, 1 - s as u8) && seam == 0 {
                    factor = &factor * &Scalar::framing_pow(x.sign as i64);
                    *t = t.delete_crossing(c, false, 0);
                    continue 'again;
                }
            }
        }
        break;
    }
    for l in &t.loops {
        if l.winding.abs() > 1 {
            return Err(SkeinError::Diagram(format!(
                "crossing-free loop with winding {}",
                l.winding
            )));
        }
    }
    Ok(factor)
}

/// Value of a descending diagram: the split product of its components.
fn terminal_value(t: &Tangle, plan: &Traversal) -> RawElement {
    let mut blob: Vec<i64> = Vec::new();
    let mut arc: Option<i64> = None;
    let mut coeff = Scalar::one();
    for (passages, winding, is_arc) in &plan.components {
        // self-writhe: crossings both of whose passages lie in this component
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for p in passages {
            *counts.entry(p.xing).or_insert(0) += 1;
        }
        let writhe: i64 = counts
            .iter()
            .filter(|(_, &k)| k == 2)
            .map(|(&c, _)| t.xings[c].as_ref().unwrap().sign as i64)
            .sum();
        if *is_arc {
            coeff = &coeff * &Scalar::framing_pow(writhe - standard_arc_writhe(*winding));
            arc = Some(*winding);
        } else {
            coeff = &coeff * &Scalar::framing_pow(writhe - standard_writhe(*winding));
            if *winding == 0 {
                coeff = &coeff * &Scalar::delta();
            } else {
                blob.push(*winding);
            }
        }
    }
    for l in &t.loops {
        coeff = &coeff * &Scalar::framing_pow(l.curls);
        if l.winding == 0 {
            coeff = &coeff * &Scalar::delta();
        } else {
            blob.push(l.winding);
        }
    }
    blob.sort();
    let mut out = RawElement::new();
    raw_add(&mut out, (blob, arc), &coeff);
    out
}

/// Evaluate a closed diagram to raw monomial coordinates.
pub fn evaluate_closed(t: &Tangle) -> Result<RawElement> {
    if t.is_relative() {
        return Err(SkeinError::UnexpectedEndpoints);
    }
    Evaluator::new().eval(t)
}

/// Evaluate a relative diagram (one input, one output).
pub fn evaluate_relative_raw(t: &Tangle) -> Result<RawElement> {
    if !t.is_relative() {
        return Err(SkeinError::MissingEndpoints);
    }
    Evaluator::new().eval(t)
}
