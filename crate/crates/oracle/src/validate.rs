/// True iff `path` is a valid simple path in the m-by-n grid from `s` to `t`:
/// endpoints match, every vertex in bounds, consecutive vertices at unit
/// distance, no vertex repeated.
pub fn validate_path(m: i32, n: i32, path: &[(i32, i32)], s: (i32, i32), t: (i32, i32)) -> bool {
    if path.is_empty() {
        return false;
    }
    if path[0] != s || *path.last().unwrap() != t {
        return false;
    }
    check_walk(m, n, path) && distinct(m, n, path)
}

/// True iff `cycle` is a Hamiltonian cycle of the m-by-n grid: unit steps
/// including the wraparound edge, no repeats, every vertex covered.
pub fn validate_cycle(m: i32, n: i32, cycle: &[(i32, i32)]) -> bool {
    let size = (m as i64) * (n as i64);
    if cycle.len() as i64 != size || cycle.len() < 4 {
        return false;
    }
    if !check_walk(m, n, cycle) || !distinct(m, n, cycle) {
        return false;
    }
    unit_step(*cycle.last().unwrap(), cycle[0])
}

fn unit_step(a: (i32, i32), b: (i32, i32)) -> bool {
    (a.0 - b.0).abs() + (a.1 - b.1).abs() == 1
}

fn check_walk(m: i32, n: i32, seq: &[(i32, i32)]) -> bool {
    for &(x, y) in seq {
        if x < 1 || x > m || y < 1 || y > n {
            return false;
        }
    }
    seq.windows(2).all(|w| unit_step(w[0], w[1]))
}

fn distinct(m: i32, _n: i32, seq: &[(i32, i32)]) -> bool {
    // Bounds were already checked. Use a dense bitmap over the occupied index
    // range when it is proportionate to the path, otherwise sort; both keep
    // multi-million vertex paths linear-ish.
    let stride = m as i64;
    let base = seq
        .iter()
        .map(|&(x, y)| (y as i64 - 1) * stride + (x as i64 - 1))
        .collect::<Vec<_>>();
    let min = *base.iter().min().unwrap();
    let max = *base.iter().max().unwrap();
    if (max - min) as usize >= seq.len().saturating_mul(4) {
        let mut sorted = base;
        sorted.sort_unstable();
        return sorted.windows(2).all(|w| w[0] != w[1]);
    }
    let mut seen = vec![false; (max - min + 1) as usize];
    for b in base {
        let slot = (b - min) as usize;
        if seen[slot] {
            return false;
        }
        seen[slot] = true;
    }
    true
}
