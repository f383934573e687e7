//! Cross-checks the retrograde solver against a value iteration written
//! from scratch over ordered player tuples.

use manyrobbers::corpus::{connected_graphs, connected_graphs_up_to};
use manyrobbers::families::{cycle, path, star};
use manyrobbers::pursuit::GameTable;
use manyrobbers::{GameValue, Graph, TeamConfig};

/// Every ordered tuple of `len` vertices.
fn tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    (0..n.pow(len as u32))
        .map(|mut code| {
            (0..len)
                .map(|_| {
                    let v = code % n;
                    code /= n;
                    v
                })
                .collect()
        })
        .collect()
}

fn joint_moves(g: &Graph, from: &[usize]) -> Vec<Vec<usize>> {
    tuples(g.n(), from.len())
        .into_iter()
        .filter(|t| t.iter().zip(from).all(|(&b, &a)| a == b || g.is_adjacent(a, b)))
        .collect()
}

fn alive(robbers: &[usize], cops: &[usize]) -> Vec<usize> {
    let mut r: Vec<usize> = robbers.iter().copied().filter(|v| !cops.contains(v)).collect();
    r.sort_unstable();
    r
}

/// Values with the cops to move, for ordered cop tuples against sorted
/// robber tuples. Pass `t` labels the positions the cops can finish in `t`
/// rounds given the labels of earlier passes.
struct Brute {
    values: std::collections::HashMap<(Vec<usize>, Vec<usize>), u32>,
}

impl Brute {
    fn new(g: &Graph, k: usize, m: usize) -> Self {
        let n = g.n();
        let mut positions = Vec::new();
        for c in tuples(n, k) {
            for size in 1..=m {
                for r in tuples(n, size) {
                    if r.windows(2).all(|w| w[0] <= w[1]) && r.iter().all(|v| !c.contains(v)) {
                        positions.push((c.clone(), r));
                    }
                }
            }
        }
        let mut values: std::collections::HashMap<(Vec<usize>, Vec<usize>), u32> = Default::default();
        let finished = |values: &std::collections::HashMap<_, u32>, c: &Vec<usize>, r: Vec<usize>| {
            r.is_empty() || values.contains_key(&(c.clone(), r))
        };
        for t in 1.. {
            let mut found = Vec::new();
            for (c, r) in &positions {
                if values.contains_key(&(c.clone(), r.clone())) {
                    continue;
                }
                let win = joint_moves(g, c).into_iter().any(|c2| {
                    let r1 = alive(r, &c2);
                    r1.is_empty()
                        || joint_moves(g, &r1)
                            .into_iter()
                            .all(|r2| finished(&values, &c2, alive(&r2, &c2)))
                });
                if win {
                    found.push((c.clone(), r.clone()));
                }
            }
            if found.is_empty() {
                break;
            }
            for key in found {
                values.insert(key, t);
            }
        }
        Brute { values }
    }

    fn value(&self, cops: &[usize], robbers: &[usize]) -> GameValue {
        let r = alive(robbers, cops);
        if r.is_empty() {
            return GameValue::Finite(0);
        }
        self.values
            .get(&(cops.to_vec(), r))
            .map_or(GameValue::RobbersWin, |&t| GameValue::Finite(t))
    }

    fn capture_time(&self, g: &Graph, k: usize, m: usize) -> GameValue {
        tuples(g.n(), k)
            .into_iter()
            .map(|c| {
                tuples(g.n(), m)
                    .into_iter()
                    .map(|r| self.value(&c, &r))
                    .max()
                    .unwrap()
            })
            .min()
            .unwrap()
    }
}

fn compare(g: &Graph, k: usize, m: usize) {
    let brute = Brute::new(g, k, m);
    let table = GameTable::solve(g, k, m).unwrap();
    for c in tuples(g.n(), k) {
        let cops = TeamConfig::new(c.clone());
        for r in tuples(g.n(), m) {
            let robbers = TeamConfig::new(alive(&r, &c));
            assert_eq!(
                table.value_of(&cops, &robbers).unwrap(),
                brute.value(&c, &r),
                "{:?} k={k} m={m} cops {c:?} robbers {r:?}",
                g.name()
            );
        }
    }
    assert_eq!(table.capture_time(), brute.capture_time(g, k, m), "{:?}", g.name());
}

#[test]
fn single_robber_tables_match_up_to_seven_vertices() {
    for g in connected_graphs_up_to(1, 6).unwrap() {
        compare(&g, 1, 1);
    }
    for g in connected_graphs(7).unwrap() {
        compare(&g, 1, 1);
    }
}

#[test]
fn several_robbers_and_cops_match_on_tiny_graphs() {
    for g in connected_graphs_up_to(2, 4).unwrap() {
        compare(&g, 1, 2);
        compare(&g, 2, 1);
    }
    compare(&path(5).unwrap(), 1, 3);
    compare(&star(3).unwrap(), 1, 3);
    compare(&cycle(5).unwrap(), 2, 2);
}

#[test]
fn library_oracle_agrees_with_this_one() {
    for g in connected_graphs_up_to(2, 5).unwrap() {
        let brute = Brute::new(&g, 1, 1);
        assert_eq!(manyrobbers::oracle::oracle_capture_time(&g, 1, 1), brute.capture_time(&g, 1, 1));
    }
}
