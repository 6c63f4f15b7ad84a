use std::fmt;

/// Caps on the exhaustive search.
///
/// The search refuses instances larger than `max_vertices` instead of running
/// unbounded. `max_expansions`, when set, additionally caps the number of DFS
/// node expansions.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub max_expansions: Option<u64>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 26,
            max_expansions: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// The instance exceeds the search budget (vertex cap or expansion cap).
    BudgetExceeded { size: i64, max: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::BudgetExceeded { size, max } => {
                write!(f, "instance size {size} exceeds the search budget of {max} vertices")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// Returns a maximum-vertex-count simple path from `s` to `t` in the m-by-n
/// grid, found by depth-first enumeration of self-avoiding walks.
///
/// Panics if `s` or `t` is out of bounds or `s == t` (this is a test oracle;
/// malformed queries are caller bugs).
pub fn brute_longest(
    m: i32,
    n: i32,
    s: (i32, i32),
    t: (i32, i32),
    budget: &SearchBudget,
) -> Result<Vec<(i32, i32)>, OracleError> {
    let mut search = Searcher::new(m, n, s, t, budget, false)?;
    search.run();
    search.check_complete(budget)?;
    let path = search
        .best_path
        .iter()
        .map(|&i| search.coords(i))
        .collect::<Vec<_>>();
    assert!(!path.is_empty(), "an s-t walk of length >= 1 always exists");
    Ok(path)
}

/// Decides whether a Hamiltonian s-t path exists, with early exit on the first
/// path that covers all mn vertices.
pub fn brute_is_hamiltonian(
    m: i32,
    n: i32,
    s: (i32, i32),
    t: (i32, i32),
    budget: &SearchBudget,
) -> Result<bool, OracleError> {
    let mut search = Searcher::new(m, n, s, t, budget, true)?;
    search.run();
    if search.best_len != search.size {
        // A negative answer is only trustworthy if the search ran to
        // completion.
        search.check_complete(budget)?;
    }
    Ok(search.best_len == search.size)
}

struct Searcher {
    m: i32,
    size: usize,
    t_idx: u8,
    /// Neighbor indices per vertex, east/south/west/north order, fixed for
    /// deterministic output.
    nbrs: Vec<[u8; 4]>,
    nbr_cnt: Vec<u8>,
    white: u64,
    colors_white: Vec<bool>,
    visited: u64,
    path: Vec<u8>,
    best_len: usize,
    best_path: Vec<u8>,
    ham_only: bool,
    expansions: u64,
    expansion_cap: u64,
}

impl Searcher {
    fn new(
        m: i32,
        n: i32,
        s: (i32, i32),
        t: (i32, i32),
        budget: &SearchBudget,
        ham_only: bool,
    ) -> Result<Searcher, OracleError> {
        assert!(m >= 1 && n >= 1, "degenerate rectangle {m}x{n}");
        for &(x, y) in &[s, t] {
            assert!(
                x >= 1 && x <= m && y >= 1 && y <= n,
                "endpoint ({x},{y}) outside R({m},{n})"
            );
        }
        assert!(s != t, "endpoints must be distinct");
        let size = (m as i64) * (n as i64);
        if size > budget.max_vertices as i64 || size > 64 {
            return Err(OracleError::BudgetExceeded {
                size,
                max: budget.max_vertices.min(64),
            });
        }
        let size = size as usize;
        let idx = |x: i32, y: i32| ((y - 1) * m + (x - 1)) as u8;
        let mut nbrs = vec![[0u8; 4]; size];
        let mut nbr_cnt = vec![0u8; size];
        let mut white = 0u64;
        let mut colors_white = vec![false; size];
        for y in 1..=n {
            for x in 1..=m {
                let i = idx(x, y) as usize;
                if (x + y) % 2 == 0 {
                    white |= 1 << i;
                    colors_white[i] = true;
                }
                let mut push = |nx: i32, ny: i32| {
                    if nx >= 1 && nx <= m && ny >= 1 && ny <= n {
                        nbrs[i][nbr_cnt[i] as usize] = idx(nx, ny);
                        nbr_cnt[i] += 1;
                    }
                };
                push(x + 1, y);
                push(x, y + 1);
                push(x - 1, y);
                push(x, y - 1);
            }
        }
        let s_idx = idx(s.0, s.1);
        Ok(Searcher {
            m,
            size,
            t_idx: idx(t.0, t.1),
            nbrs,
            nbr_cnt,
            white,
            colors_white,
            visited: 1 << s_idx,
            path: vec![s_idx],
            best_len: 0,
            best_path: Vec::new(),
            ham_only,
            expansions: 0,
            expansion_cap: budget.max_expansions.unwrap_or(u64::MAX),
        })
    }

    fn coords(&self, i: u8) -> (i32, i32) {
        let i = i as i32;
        (i % self.m + 1, i / self.m + 1)
    }

    /// A truncated search cannot vouch for maximality; surface that as a
    /// budget error instead of returning a possibly short path.
    fn check_complete(&self, budget: &SearchBudget) -> Result<(), OracleError> {
        if self.expansions >= self.expansion_cap && self.best_len != self.size {
            return Err(OracleError::BudgetExceeded {
                size: self.size as i64,
                max: budget.max_vertices,
            });
        }
        Ok(())
    }

    /// All vertices reachable from `from` through unvisited vertices,
    /// computed by repeated frontier expansion on the bitboard.
    fn reachable(&self, from: u8) -> u64 {
        let free = !self.visited;
        let mut reach = 1u64 << from;
        loop {
            let mut grow = reach;
            // Expand one adjacency step. Neighbor lists are tiny, so walking
            // the set bits stays cheap at oracle scale.
            let mut bits = reach;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                for k in 0..self.nbr_cnt[i] as usize {
                    let j = self.nbrs[i][k];
                    grow |= 1 << j;
                }
            }
            grow &= free | reach;
            if grow == reach {
                return reach;
            }
            reach = grow;
        }
    }

    /// Optimistic bound on how many more vertices the current walk can still
    /// collect: everything unreachable is lost, and the bipartite coloring
    /// forces strict alternation from the current vertex onward.
    fn potential(&self, cur: u8) -> Option<usize> {
        let reach = self.reachable(cur);
        if reach & (1 << self.t_idx) == 0 {
            return None;
        }
        let open = reach & !(1u64 << cur);
        let w = (open & self.white).count_ones() as usize;
        let b = (open & !self.white).count_ones() as usize;
        let (own, other) = if self.colors_white[cur as usize] {
            (w, b)
        } else {
            (b, w)
        };
        // Continuation alternates other, own, other, ...
        let extra = if other > own {
            2 * own + 1
        } else {
            2 * other
        };
        Some(self.path.len() + extra)
    }

    fn run(&mut self) {
        let start = self.path[0];
        self.dfs(start);
    }

    fn dfs(&mut self, cur: u8) {
        if self.best_len == self.size || self.expansions >= self.expansion_cap {
            return;
        }
        self.expansions += 1;
        if cur == self.t_idx {
            if self.path.len() > self.best_len {
                self.best_len = self.path.len();
                self.best_path = self.path.clone();
            }
            return;
        }
        match self.potential(cur) {
            None => return,
            Some(p) => {
                let enough = if self.ham_only { self.size } else { self.best_len + 1 };
                if p < enough {
                    return;
                }
            }
        }
        for k in 0..self.nbr_cnt[cur as usize] as usize {
            let next = self.nbrs[cur as usize][k];
            if self.visited & (1 << next) != 0 {
                continue;
            }
            self.visited |= 1 << next;
            self.path.push(next);
            self.dfs(next);
            self.path.pop();
            self.visited &= !(1 << next);
        }
    }
}
