//! Brute-force oracles. Nothing here calls the algorithms under test; graphs
//! are read only through their node and edge lists.
#![allow(dead_code, clippy::needless_range_loop)]

use netresil::{Graph, NodeId};

pub const UNREACHABLE: usize = usize::MAX;

/// Dense adjacency matrix over node indices (ascending id order).
pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.node_count();
    let pos = |id: NodeId| g.nodes().iter().position(|&x| x == id).unwrap();
    let mut a = vec![vec![false; n]; n];
    for (x, y) in g.edges() {
        let (i, j) = (pos(x), pos(y));
        a[i][j] = true;
        a[j][i] = true;
    }
    a
}

/// Floyd–Warshall hop distances.
pub fn all_pairs_distances(g: &Graph) -> Vec<Vec<usize>> {
    let a = adjacency_matrix(g);
    let n = a.len();
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in 0..n {
            if a[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != UNREACHABLE && d[k][j] != UNREACHABLE && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every shortest path from `s` to `t`, as node-index sequences.
pub fn shortest_paths(a: &[Vec<bool>], d: &[Vec<usize>], s: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = vec![s];
    fn walk(a: &[Vec<bool>], d: &[Vec<usize>], t: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let cur = *path.last().unwrap();
        if cur == t {
            out.push(path.clone());
            return;
        }
        for w in 0..a.len() {
            if a[cur][w] && d[w][t] != UNREACHABLE && d[w][t] + 1 == d[cur][t] {
                path.push(w);
                walk(a, d, t, path, out);
                path.pop();
            }
        }
    }
    if d[s][t] != UNREACHABLE {
        walk(a, d, t, &mut path, &mut out);
    }
    out
}

/// Raw node and edge betweenness over unordered pairs by explicit path
/// enumeration. Edge scores follow `g.edges()` order.
pub fn brute_force_betweenness(g: &Graph) -> (Vec<f64>, Vec<f64>) {
    let a = adjacency_matrix(g);
    let d = all_pairs_distances(g);
    let n = a.len();
    let edge_list: Vec<(usize, usize)> = g
        .edges()
        .map(|(x, y)| (g.index_of(x).unwrap(), g.index_of(y).unwrap()))
        .collect();
    let mut node = vec![0.0; n];
    let mut edge = vec![0.0; edge_list.len()];
    for s in 0..n {
        for t in s + 1..n {
            let paths = shortest_paths(&a, &d, s, t);
            if paths.is_empty() {
                continue;
            }
            let total = paths.len() as f64;
            let mut through = vec![0usize; n];
            let mut along = vec![0usize; edge_list.len()];
            for p in &paths {
                for &v in &p[1..p.len() - 1] {
                    through[v] += 1;
                }
                for w in p.windows(2) {
                    let key = (w[0].min(w[1]), w[0].max(w[1]));
                    along[edge_list.iter().position(|&e| e == key).unwrap()] += 1;
                }
            }
            for v in 0..n {
                node[v] += through[v] as f64 / total;
            }
            for e in 0..edge_list.len() {
                edge[e] += along[e] as f64 / total;
            }
        }
    }
    (node, edge)
}

/// Mean distance over connected unordered pairs.
pub fn brute_force_average_path(g: &Graph) -> f64 {
    let d = all_pairs_distances(g);
    let n = d.len();
    let (mut sum, mut pairs) = (0usize, 0usize);
    for i in 0..n {
        for j in i + 1..n {
            if d[i][j] != UNREACHABLE {
                sum += d[i][j];
                pairs += 1;
            }
        }
    }
    if pairs == 0 {
        0.0
    } else {
        sum as f64 / pairs as f64
    }
}

/// Pairwise form `1/2m Σ_ij [A_ij − k_i k_j / 2m] δ(c_i, c_j)`.
pub fn pairwise_modularity(g: &Graph, labels: &[usize]) -> f64 {
    let a = adjacency_matrix(g);
    let n = a.len();
    let k: Vec<f64> = a.iter().map(|row| row.iter().filter(|&&x| x).count() as f64).collect();
    let two_m: f64 = k.iter().sum();
    let mut q = 0.0;
    for i in 0..n {
        for j in 0..n {
            if labels[i] == labels[j] {
                q += (a[i][j] as u8 as f64) - k[i] * k[j] / two_m;
            }
        }
    }
    q / two_m
}

/// Calls `visit` on every set partition of `0..n` (restricted growth strings)
/// with at most `max_blocks` blocks.
pub fn for_each_partition(n: usize, max_blocks: usize, visit: &mut impl FnMut(&[usize])) {
    fn rec(i: usize, used: usize, max_blocks: usize, labels: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if i == labels.len() {
            visit(labels);
            return;
        }
        for c in 0..=used.min(max_blocks - 1) {
            labels[i] = c;
            rec(i + 1, used.max(c + 1), max_blocks, labels, visit);
        }
    }
    let mut labels = vec![0; n];
    if n == 0 {
        visit(&labels);
    } else {
        rec(0, 0, max_blocks, &mut labels, visit);
    }
}

pub fn exhaustive_max_modularity(g: &Graph, max_blocks: usize) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for_each_partition(g.node_count(), max_blocks, &mut |labels| {
        best = best.max(pairwise_modularity(g, labels));
    });
    best
}

pub fn path(n: u64) -> Graph {
    Graph::from_pairs(&(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
}

pub fn cycle(n: u64) -> Graph {
    Graph::from_pairs(&(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
}

pub fn complete(n: u64) -> Graph {
    let mut e = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            e.push((a, b));
        }
    }
    Graph::from_pairs(&e).unwrap()
}

pub fn star(leaves: u64) -> Graph {
    Graph::from_pairs(&(1..=leaves).map(|i| (0, i)).collect::<Vec<_>>()).unwrap()
}

pub fn two_triangles_bridged() -> Graph {
    Graph::from_pairs(&[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap()
}

pub fn two_triangles() -> Graph {
    Graph::from_pairs(&[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
}

pub fn two_k5_bridged() -> Graph {
    let mut e = Vec::new();
    for base in [0, 5] {
        for a in base..base + 5 {
            for b in a + 1..base + 5 {
                e.push((a, b));
            }
        }
    }
    e.push((4, 5));
    Graph::from_pairs(&e).unwrap()
}

/// Same graph with ids mapped through `perm` (`perm[old] = new`).
pub fn relabel(g: &Graph, perm: &[u64]) -> Graph {
    Graph::from_edges(
        g.edges()
            .map(|(a, b)| (NodeId(perm[a.0 as usize]), NodeId(perm[b.0 as usize]))),
        g.nodes().iter().map(|id| NodeId(perm[id.0 as usize])),
    )
    .unwrap()
}
