//! The rule schemata E1–E9 as parameterized matchers.
//!
//! Each schema has fixed *anchor* letters and, between consecutive anchors,
//! optional wildcard segments whose letters must satisfy a range constraint:
//!
//! | rule | left-hand side                                   | conditions            |
//! |------|--------------------------------------------------|-----------------------|
//! | E1   | `(k,l)(i,j)`                                     | `k>l>i>j`             |
//! | E2   | `(k,l) V[j-1,1] (i,j)`                           | `k>i>j>l`             |
//! | E3   | `(t3,t2)(t2,t1)`                                 | `t3>t2>t1`            |
//! | E4   | `(t3,t1) V[t2-1,1] (t3,t2)`                      | `t3>t2>t1`            |
//! | E5   | `(t,s) V[t2-1,1] (t2,t1) W[t3-1,t1] (t3,t1)`     | `t>t3>t2>t1`, `t2>s`  |
//! | E6   | `(t3,s) V[t2-1,1] (t2,t1) W[t3-1,t1] (t3,t1)`    | `t3>t2>t1`, `t2>s`    |
//! | E7   | `(2,1) V2[2,1] (3,1) … V(n-1)[n-1,1] (n,1)`      |                       |
//! | E8±  | `(t,s) δ^{±1}`                                   |                       |
//! | E9±  | `δ δ⁻¹`, `δ⁻¹ δ`                                 |                       |
//!
//! Every anchor has an upper index above the `hi` bound of the wildcard in
//! front of it, so a scan that stops at the first out-of-range letter
//! enumerates all matches.

use std::fmt;

use crate::braid::{
    delta_conjugate, prime_transform, BandLetter, BraidContext, Letter, Sign, Word,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    E1,
    E2,
    E3,
    E4,
    E5,
    E6,
    E7,
    E8Pos,
    E8Neg,
    E9Pos,
    E9Neg,
}

impl RuleId {
    pub const ALL: [RuleId; 11] = [
        RuleId::E1,
        RuleId::E2,
        RuleId::E3,
        RuleId::E4,
        RuleId::E5,
        RuleId::E6,
        RuleId::E7,
        RuleId::E8Pos,
        RuleId::E8Neg,
        RuleId::E9Pos,
        RuleId::E9Neg,
    ];

    /// Relation number 1–9, merging the δ and δ⁻¹ variants of E8 and E9.
    pub fn family(self) -> u8 {
        match self {
            RuleId::E1 => 1,
            RuleId::E2 => 2,
            RuleId::E3 => 3,
            RuleId::E4 => 4,
            RuleId::E5 => 5,
            RuleId::E6 => 6,
            RuleId::E7 => 7,
            RuleId::E8Pos | RuleId::E8Neg => 8,
            RuleId::E9Pos | RuleId::E9Neg => 9,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RuleId::E8Pos => "E8+",
            RuleId::E8Neg => "E8-",
            RuleId::E9Pos => "E9+",
            RuleId::E9Neg => "E9-",
            other => return write!(f, "E{}", other.family()),
        };
        f.write_str(s)
    }
}

/// One instantiation of a schema inside a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RuleMatch {
    pub rule: RuleId,
    pub start: usize,
    pub len: usize,
    /// Anchor band letters, left to right.
    pub anchors: Vec<BandLetter>,
    /// Wildcard segments between consecutive anchors (`V`, `W`, or `V2…`).
    pub wildcards: Vec<Word>,
}

impl RuleMatch {
    pub fn end(&self) -> usize {
        self.start + self.len
    }

    /// Named schema parameters, in the order the schema lists them.
    pub fn params(&self) -> Vec<(&'static str, u8)> {
        let a = &self.anchors;
        match self.rule {
            RuleId::E1 | RuleId::E2 => vec![
                ("k", a[0].t()),
                ("l", a[0].s()),
                ("i", a[1].t()),
                ("j", a[1].s()),
            ],
            RuleId::E3 => vec![("t3", a[0].t()), ("t2", a[0].s()), ("t1", a[1].s())],
            RuleId::E4 => vec![("t3", a[0].t()), ("t2", a[1].s()), ("t1", a[0].s())],
            RuleId::E5 | RuleId::E6 => vec![
                ("t", a[0].t()),
                ("s", a[0].s()),
                ("t3", a[2].t()),
                ("t2", a[1].t()),
                ("t1", a[1].s()),
            ],
            RuleId::E7 => vec![],
            RuleId::E8Pos | RuleId::E8Neg => vec![("t", a[0].t()), ("s", a[0].s())],
            RuleId::E9Pos | RuleId::E9Neg => vec![],
        }
    }

    /// The instantiated left-hand side.
    pub fn lhs(&self) -> Word {
        let mut out = Word::new();
        match self.rule {
            RuleId::E8Pos => {
                out.push(self.anchors[0]);
                out.push(Letter::Delta);
            }
            RuleId::E8Neg => {
                out.push(self.anchors[0]);
                out.push(Letter::DeltaInv);
            }
            RuleId::E9Pos => out = Word::from(vec![Letter::Delta, Letter::DeltaInv]),
            RuleId::E9Neg => out = Word::from(vec![Letter::DeltaInv, Letter::Delta]),
            _ => {
                for (idx, &g) in self.anchors.iter().enumerate() {
                    if idx > 0 {
                        if let Some(v) = self.wildcards.get(idx - 1) {
                            out.extend_from(v);
                        }
                    }
                    out.push(g);
                }
            }
        }
        out
    }
}

/// Anchor positions of one candidate match; wildcards are the gaps.
#[derive(Clone, Debug)]
pub(crate) struct Candidate {
    pub len: usize,
    pub anchors: Vec<usize>,
}

fn band_at(w: &[Letter], pos: usize) -> Option<BandLetter> {
    w.get(pos).and_then(|x| x.band())
}

fn has_wildcards(rule: RuleId) -> bool {
    matches!(
        rule,
        RuleId::E2 | RuleId::E4 | RuleId::E5 | RuleId::E6 | RuleId::E7
    )
}

/// All candidate matches of `rule` starting at `pos`, shortest first
/// (ties broken by earlier inner anchors).
pub(crate) fn candidates(
    ctx: BraidContext,
    w: &[Letter],
    pos: usize,
    rule: RuleId,
) -> Vec<Candidate> {
    let mut out = Vec::new();
    if pos >= w.len() {
        return out;
    }
    match rule {
        RuleId::E1 => {
            if let (Some(a), Some(b)) = (band_at(w, pos), band_at(w, pos + 1)) {
                if a.s() > b.t() {
                    out.push(Candidate {
                        len: 2,
                        anchors: vec![pos, pos + 1],
                    });
                }
            }
        }
        RuleId::E2 => {
            let Some(first) = band_at(w, pos) else {
                return out;
            };
            let (k, l) = (first.t(), first.s());
            let mut v_max = 0u8;
            for e in pos + 1..w.len() {
                let Some(a) = band_at(w, e) else { break };
                let (i, j) = (a.t(), a.s());
                if k > i && j > l && v_max < j {
                    out.push(Candidate {
                        len: e - pos + 1,
                        anchors: vec![pos, e],
                    });
                }
                v_max = v_max.max(i);
                // V letters satisfy t ≤ j-1 ≤ k-3
                if v_max + 3 > k {
                    break;
                }
            }
        }
        RuleId::E3 => {
            if let (Some(a), Some(b)) = (band_at(w, pos), band_at(w, pos + 1)) {
                if a.s() == b.t() {
                    out.push(Candidate {
                        len: 2,
                        anchors: vec![pos, pos + 1],
                    });
                }
            }
        }
        RuleId::E4 => {
            let Some(first) = band_at(w, pos) else {
                return out;
            };
            let (t3, t1) = (first.t(), first.s());
            let mut v_max = 0u8;
            for e in pos + 1..w.len() {
                let Some(a) = band_at(w, e) else { break };
                if a.t() == t3 && a.s() > t1 && v_max < a.s() {
                    out.push(Candidate {
                        len: e - pos + 1,
                        anchors: vec![pos, e],
                    });
                }
                v_max = v_max.max(a.t());
                // V letters satisfy t ≤ t2-1 ≤ t3-2
                if v_max + 2 > t3 {
                    break;
                }
            }
        }
        RuleId::E5 | RuleId::E6 => scan_e5_e6(w, pos, rule == RuleId::E6, &mut out),
        RuleId::E7 => {
            if band_at(w, pos) != Some(BandLetter::new(2, 1)) {
                return out;
            }
            let n = ctx.n();
            let mut anchors = vec![pos];
            let mut level = 2u8;
            if level == n {
                out.push(Candidate { len: 1, anchors });
                return out;
            }
            for e in pos + 1..w.len() {
                let Some(a) = band_at(w, e) else { break };
                if a.t() <= level {
                    continue;
                }
                if a.t() == level + 1 && a.s() == 1 {
                    anchors.push(e);
                    level += 1;
                    if level == n {
                        out.push(Candidate {
                            len: e - pos + 1,
                            anchors,
                        });
                        break;
                    }
                } else {
                    break;
                }
            }
        }
        RuleId::E8Pos | RuleId::E8Neg => {
            let want = if rule == RuleId::E8Pos {
                Letter::Delta
            } else {
                Letter::DeltaInv
            };
            if band_at(w, pos).is_some() && w.get(pos + 1) == Some(&want) {
                out.push(Candidate {
                    len: 2,
                    anchors: vec![pos],
                });
            }
        }
        RuleId::E9Pos | RuleId::E9Neg => {
            let pair = if rule == RuleId::E9Pos {
                [Letter::Delta, Letter::DeltaInv]
            } else {
                [Letter::DeltaInv, Letter::Delta]
            };
            if w.get(pos..pos + 2) == Some(&pair[..]) {
                out.push(Candidate {
                    len: 2,
                    anchors: vec![],
                });
            }
        }
    }
    out
}

fn scan_e5_e6(w: &[Letter], pos: usize, same_top: bool, out: &mut Vec<Candidate>) {
    let Some(first) = band_at(w, pos) else {
        return;
    };
    let (t, s) = (first.t(), first.s());
    let mut v_max = 0u8;
    for p2 in pos + 1..w.len() {
        let Some(mid) = band_at(w, p2) else { break };
        let (t2, t1) = (mid.t(), mid.s());
        if v_max < t2 && t2 > s && t2 < t {
            let mut w_max = 0u8;
            let mut w_min = u8::MAX;
            for p3 in p2 + 1..w.len() {
                let Some(last) = band_at(w, p3) else { break };
                let t3 = last.t();
                let top_ok = if same_top { t3 == t } else { t3 < t };
                if last.s() == t1 && t3 > t2 && top_ok && w_max < t3 && w_min >= t1 {
                    out.push(Candidate {
                        len: p3 - pos + 1,
                        anchors: vec![pos, p2, p3],
                    });
                }
                w_max = w_max.max(t3);
                w_min = w_min.min(last.s());
                // W letters satisfy t1 ≤ s and t ≤ t3-1 ≤ t-1
                if w_min < t1 || w_max >= t {
                    break;
                }
            }
        }
        v_max = v_max.max(t2);
        // V letters satisfy t ≤ t2-1 ≤ t-2
        if v_max + 2 > t {
            break;
        }
    }
    out.sort_by_key(|c| (c.len, c.anchors[1]));
}

pub(crate) fn build_match(w: &[Letter], pos: usize, rule: RuleId, c: &Candidate) -> RuleMatch {
    let anchors = c
        .anchors
        .iter()
        .map(|&p| band_at(w, p).expect("anchor"))
        .collect();
    let wildcards = if has_wildcards(rule) {
        c.anchors
            .windows(2)
            .map(|p| Word::from(&w[p[0] + 1..p[1]]))
            .collect()
    } else {
        Vec::new()
    };
    RuleMatch {
        rule,
        start: pos,
        len: c.len,
        anchors,
        wildcards,
    }
}

/// Every match of `rule` at `pos`, shortest wildcards first.
pub fn matches_at(ctx: BraidContext, w: &[Letter], pos: usize, rule: RuleId) -> Vec<RuleMatch> {
    candidates(ctx, w, pos, rule)
        .iter()
        .map(|c| build_match(w, pos, rule, c))
        .collect()
}

/// The match of `rule` at `pos` with the shortest wildcards, if any.
pub fn match_at(ctx: BraidContext, w: &[Letter], pos: usize, rule: RuleId) -> Option<RuleMatch> {
    candidates(ctx, w, pos, rule)
        .first()
        .map(|c| build_match(w, pos, rule, c))
}

/// The instantiated right-hand side of a match.
pub fn rhs_of(ctx: BraidContext, m: &RuleMatch) -> Word {
    let a = &m.anchors;
    let mut out = Word::new();
    let prime = |v: &Word, hi: u8, lo: u8| prime_transform(v, hi, lo).expect("wildcard in range");
    match m.rule {
        RuleId::E1 => {
            out.push(a[1]);
            out.push(a[0]);
        }
        RuleId::E2 => {
            out.push(a[1]);
            out.push(a[0]);
            out.extend_from(&m.wildcards[0]);
        }
        RuleId::E3 => {
            out.push(a[1]);
            out.push(BandLetter::new(a[0].t(), a[1].s()));
        }
        RuleId::E4 => {
            let (t3, t2, t1) = (a[0].t(), a[1].s(), a[0].s());
            out.push(BandLetter::new(t2, t1));
            out.push(BandLetter::new(t3, t1));
            out.extend_from(&m.wildcards[0]);
        }
        RuleId::E5 | RuleId::E6 => {
            let (first, mid) = (a[0], a[1]);
            let (t3, t2, t1) = (a[2].t(), mid.t(), mid.s());
            if m.rule == RuleId::E5 {
                out.push(BandLetter::new(t3, t2));
                out.push(first);
            } else {
                out.push(BandLetter::new(t2, first.s()));
                out.push(BandLetter::new(t3, first.s()));
            }
            out.extend_from(&m.wildcards[0]);
            out.push(mid);
            out.extend_from(&prime(&m.wildcards[1], t3, t1));
        }
        RuleId::E7 => {
            out.push(Letter::Delta);
            for (idx, v) in m.wildcards.iter().enumerate() {
                // V_i sits in front of anchor (i+1,1), i = idx + 2
                out.extend_from(&prime(v, idx as u8 + 3, 1));
            }
        }
        RuleId::E8Pos => {
            out.push(Letter::Delta);
            out.push(delta_conjugate(ctx, a[0], Sign::Pos));
        }
        RuleId::E8Neg => {
            out.push(Letter::DeltaInv);
            out.push(delta_conjugate(ctx, a[0], Sign::Neg));
        }
        RuleId::E9Pos | RuleId::E9Neg => {}
    }
    out
}
