// SPDX-License-Identifier: Apache-2.0

//! Small, deliberately naive reimplementations used to cross-check the
//! library: `F_{p²} = F_p[α]/(α² − d)` for prime `p`, the Paley graph on it,
//! Bron–Kerbosch on `u128` masks, and rank modulo a large prime.

#![allow(dead_code)]

pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % m;
        }
        a = a * a % m;
        e >>= 1;
    }
    r
}

pub fn is_residue(a: u64, p: u64) -> bool {
    a % p != 0 && pow_mod(a, (p - 1) / 2, p) == 1
}

/// `F_{p²}` with elements `(x, y) = x + yα`, indexed `x·p + y`.
pub struct PrimeSquare {
    pub p: u64,
    pub d: u64,
    pub square: Vec<bool>,
    pub adj: Vec<Vec<bool>>,
}

impl PrimeSquare {
    pub fn new(p: u64) -> Self {
        let d = (2..p).find(|&a| !is_residue(a, p)).expect("non-residue");
        let n = (p * p) as usize;
        let mut s = PrimeSquare {
            p,
            d,
            square: vec![false; n],
            adj: Vec::new(),
        };
        for i in 1..n {
            let e = s.element(i);
            let sq = s.mul(e, e);
            let k = s.index(sq);
            s.square[k] = true;
        }
        let adj = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| i != j && s.square[s.index(s.sub(s.element(i), s.element(j)))])
                    .collect()
            })
            .collect();
        s.adj = adj;
        s
    }

    pub fn order(&self) -> usize {
        (self.p * self.p) as usize
    }

    pub fn element(&self, i: usize) -> (u64, u64) {
        (i as u64 / self.p, i as u64 % self.p)
    }

    pub fn index(&self, e: (u64, u64)) -> usize {
        (e.0 * self.p + e.1) as usize
    }

    pub fn mul(&self, a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
        let p = self.p;
        ((a.0 * b.0 + a.1 * b.1 % p * self.d) % p, (a.0 * b.1 + a.1 * b.0) % p)
    }

    pub fn add(&self, a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
        ((a.0 + b.0) % self.p, (a.1 + b.1) % self.p)
    }

    pub fn sub(&self, a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
        ((a.0 + self.p - b.0) % self.p, (a.1 + self.p - b.1) % self.p)
    }

    pub fn norm(&self, a: (u64, u64)) -> u64 {
        let p = self.p;
        (a.0 * a.0 % p + p - a.1 * a.1 % p * self.d % p) % p
    }

    pub fn multiplicative_order(&self, a: (u64, u64)) -> u64 {
        let mut cur = a;
        let mut k = 1;
        while cur != (1, 0) {
            cur = self.mul(cur, a);
            k += 1;
        }
        k
    }

    pub fn primitive(&self) -> (u64, u64) {
        let full = self.p * self.p - 1;
        (1..self.order())
            .map(|i| self.element(i))
            .find(|&e| self.multiplicative_order(e) == full)
            .expect("primitive element")
    }

    /// Even and odd powers of `ω = β^(p−1)`, as sorted index lists.
    pub fn oval_halves(&self) -> [Vec<usize>; 2] {
        let beta = self.primitive();
        let mut omega = (1, 0);
        for _ in 0..self.p - 1 {
            omega = self.mul(omega, beta);
        }
        let mut halves = [Vec::new(), Vec::new()];
        let mut cur = (1, 0);
        for k in 0..=self.p {
            halves[(k % 2) as usize].push(self.index(cur));
            cur = self.mul(cur, omega);
        }
        for h in &mut halves {
            h.sort_unstable();
        }
        halves
    }

    pub fn masks(&self) -> Vec<u128> {
        assert!(self.order() <= 128);
        self.adj
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .fold(0u128, |m, (j, _)| m | 1 << j)
            })
            .collect()
    }
}

/// Every maximal clique, as a bit mask.
pub fn maximal_cliques(adj: &[u128]) -> Vec<u128> {
    fn bk(adj: &[u128], r: u128, mut p: u128, mut x: u128, out: &mut Vec<u128>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let u = (p | x).trailing_zeros() as usize;
        let mut cand = p & !adj[u];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            bk(adj, r | 1 << v, p & adj[v], x & adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let n = adj.len();
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut out = Vec::new();
    bk(adj, 0, all, 0, &mut out);
    out
}

pub fn mask_of(set: &[usize]) -> u128 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

/// Rank modulo the prime `m`. Full rank mod `m` implies full rank over `Q`.
pub fn rank_mod(rows: &[Vec<i64>], m: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(m as i64) as u64).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = pow_mod(a[r][c], m - 2, m);
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c] * inv % m;
                for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x = (*x + m - f * y % m) % m;
                }
            }
        }
        r += 1;
    }
    r
}
