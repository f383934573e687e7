//! Brute-force minimax used to cross-check the solver on small inputs.
//!
//! Players are ordered tuples, every joint move is enumerated including
//! robbers stepping onto cops, and values come from a memoized
//! "can the cops finish within `t` rounds" recursion with iterative
//! deepening. Exponential everywhere; meant for tiny graphs only.

use std::collections::HashMap;

use crate::graph::{Graph, Vertex};
use crate::pursuit::GameValue;

pub struct Oracle<'a> {
    g: &'a Graph,
    horizon: u32,
    memo: HashMap<(Vec<Vertex>, Vec<Vertex>, u32), bool>,
}

fn tuples(g: &Graph, from: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut out = vec![Vec::new()];
    for &v in from {
        let mut next = Vec::new();
        for prefix in &out {
            for w in g.closed_neighborhood(v) {
                let mut t = prefix.clone();
                t.push(w);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

fn all_tuples(n: usize, len: usize) -> Vec<Vec<Vertex>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..n).map(move |v| {
                    let mut t = p.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

fn survivors(robbers: &[Vertex], cops: &[Vertex]) -> Vec<Vertex> {
    robbers.iter().copied().filter(|r| !cops.contains(r)).collect()
}

impl<'a> Oracle<'a> {
    /// Values above `horizon` rounds are reported as a robber win. The
    /// number of positions is always a safe horizon.
    pub fn new(g: &'a Graph, horizon: u32) -> Self {
        Oracle {
            g,
            horizon,
            memo: HashMap::new(),
        }
    }

    /// Horizon covering every finite value for `k` cops and `m` robbers.
    pub fn safe_horizon(g: &Graph, k: usize, m: usize) -> u32 {
        (g.n() as u32).pow((k + m) as u32) + 1
    }

    fn wins_within(&mut self, cops: &[Vertex], robbers: &[Vertex], t: u32) -> bool {
        if robbers.is_empty() {
            return true;
        }
        if t == 0 {
            return false;
        }
        let key = (cops.to_vec(), robbers.to_vec(), t);
        if let Some(&w) = self.memo.get(&key) {
            return w;
        }
        let mut win = false;
        for c2 in tuples(self.g, cops) {
            let r1 = survivors(robbers, &c2);
            let ok = r1.is_empty()
                || tuples(self.g, &r1).into_iter().all(|r2| {
                    let r2 = survivors(&r2, &c2);
                    r2.is_empty() || self.wins_within(&c2, &r2, t - 1)
                });
            if ok {
                win = true;
                break;
            }
        }
        self.memo.insert(key, win);
        win
    }

    /// Value with the cops to move.
    pub fn value(&mut self, cops: &[Vertex], robbers: &[Vertex]) -> GameValue {
        (0..=self.horizon)
            .find(|&t| self.wins_within(cops, robbers, t))
            .map_or(GameValue::RobbersWin, GameValue::Finite)
    }

    /// Worst placement of `m` robbers against a fixed cop start.
    pub fn capture_time_from(&mut self, cops: &[Vertex], m: usize) -> GameValue {
        all_tuples(self.g.n(), m)
            .into_iter()
            .map(|r| self.value(cops, &survivors(&r, cops)))
            .max()
            .expect("at least one placement")
    }

    /// `capt_k(G, m)`.
    pub fn capture_time(&mut self, k: usize, m: usize) -> GameValue {
        all_tuples(self.g.n(), k)
            .into_iter()
            .map(|c| self.capture_time_from(&c, m))
            .min()
            .expect("at least one placement")
    }
}

/// `capt_k(G, m)` by brute force.
pub fn oracle_capture_time(g: &Graph, k: usize, m: usize) -> GameValue {
    Oracle::new(g, Oracle::safe_horizon(g, k, m)).capture_time(k, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn small_values() {
        assert_eq!(oracle_capture_time(&path(2).unwrap(), 1, 1), GameValue::Finite(1));
        assert_eq!(oracle_capture_time(&path(4).unwrap(), 1, 2), GameValue::Finite(3));
        assert_eq!(oracle_capture_time(&cycle(4).unwrap(), 1, 1), GameValue::RobbersWin);
        assert_eq!(oracle_capture_time(&complete(3).unwrap(), 1, 2), GameValue::Finite(2));
        let p3 = path(3).unwrap();
        assert_eq!(Oracle::new(&p3, 30).value(&[0], &[2, 2]), GameValue::Finite(2));
    }
}
