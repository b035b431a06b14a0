//! Maximum bipartite matching (Hopcroft-Karp).

use std::collections::VecDeque;

/// Bipartite graph with `left` vertices whose adjacency lists index `0..right`.
pub fn max_matching(adj: &[Vec<usize>], right: usize) -> usize {
    const FREE: usize = usize::MAX;
    let left = adj.len();
    let mut match_l = vec![FREE; left];
    let mut match_r = vec![FREE; right];
    let mut dist = vec![0usize; left];
    let mut size = 0;
    loop {
        let mut queue = VecDeque::new();
        for u in 0..left {
            if match_l[u] == FREE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match match_r[v] {
                    FREE => found = true,
                    w if dist[w] == usize::MAX => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            return size;
        }
        fn augment(u: usize, adj: &[Vec<usize>], ml: &mut [usize], mr: &mut [usize], dist: &mut [usize]) -> bool {
            for &v in &adj[u] {
                let w = mr[v];
                if w == usize::MAX || (dist[w] == dist[u] + 1 && augment(w, adj, ml, mr, dist)) {
                    ml[u] = v;
                    mr[v] = u;
                    return true;
                }
            }
            dist[u] = usize::MAX;
            false
        }
        for u in 0..left {
            if match_l[u] == FREE && augment(u, adj, &mut match_l, &mut match_r, &mut dist) {
                size += 1;
            }
        }
    }
}

/// Whether a perfect matching exists between two sides of equal size.
pub fn has_perfect_matching(adj: &[Vec<usize>], right: usize) -> bool {
    adj.len() == right && adj.iter().all(|a| !a.is_empty()) && max_matching(adj, right) == right
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(max_matching(&[vec![0, 1], vec![0], vec![1]], 2), 2);
        assert!(has_perfect_matching(&[vec![0, 1], vec![0]], 2));
        assert!(!has_perfect_matching(&[vec![0], vec![0]], 2));
        assert!(has_perfect_matching(&[], 0));
    }

    #[test]
    fn agrees_with_exhaustive_search() {
        fn brute(adj: &[Vec<usize>], used: &mut Vec<bool>, i: usize) -> usize {
            if i == adj.len() {
                return 0;
            }
            let mut best = brute(adj, used, i + 1);
            for &v in &adj[i] {
                if !used[v] {
                    used[v] = true;
                    best = best.max(1 + brute(adj, used, i + 1));
                    used[v] = false;
                }
            }
            best
        }
        let mut seed = 12345u64;
        for _ in 0..300 {
            let mut adj = vec![Vec::new(); 6];
            for row in adj.iter_mut() {
                for v in 0..6 {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if seed >> 61 < 3 {
                        row.push(v);
                    }
                }
            }
            assert_eq!(max_matching(&adj, 6), brute(&adj, &mut vec![false; 6], 0));
        }
    }
}
