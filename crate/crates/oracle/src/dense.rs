//! Dense complex matrices and Kronecker-product operator construction.

use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            m.data[r * dim + r] = ONE;
        }
        m
    }

    pub fn from_rows(rows: &[&[Complex64]]) -> Self {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim);
            data.extend_from_slice(row);
        }
        Matrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.dim + c]
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let d = self.dim * other.dim;
        let mut out = Matrix::zeros(d);
        for r1 in 0..self.dim {
            for c1 in 0..self.dim {
                let a = self.get(r1, c1);
                if a == ZERO {
                    continue;
                }
                for r2 in 0..other.dim {
                    for c2 in 0..other.dim {
                        out.data[(r1 * other.dim + r2) * d + c1 * other.dim + c2] =
                            a * other.get(r2, c2);
                    }
                }
            }
        }
        out
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = Matrix::zeros(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a == ZERO {
                    continue;
                }
                for c in 0..d {
                    out.data[r * d + c] += a * other.get(k, c);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(-ONE))
    }

    pub fn scale(&self, s: Complex64) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn dagger(&self) -> Matrix {
        let d = self.dim;
        let mut out = Matrix::zeros(d);
        for r in 0..d {
            for c in 0..d {
                out.data[c * d + r] = self.get(r, c).conj();
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Matrix, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.data.iter().all(|a| a.norm() <= tol)
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.matmul(other).sub(&other.matmul(self))
    }
}

pub fn letter_matrix(letter: char) -> Matrix {
    let z = ZERO;
    match letter {
        'I' => Matrix::from_rows(&[&[ONE, z], &[z, ONE]]),
        'X' => Matrix::from_rows(&[&[z, ONE], &[ONE, z]]),
        'Y' => Matrix::from_rows(&[&[z, -I], &[I, z]]),
        'Z' => Matrix::from_rows(&[&[ONE, z], &[z, -ONE]]),
        other => panic!("not a Pauli letter: {other}"),
    }
}

fn i_pow(k: u8) -> Complex64 {
    match k % 4 {
        0 => ONE,
        1 => I,
        2 => -ONE,
        _ => -I,
    }
}

/// `i^k` times the Kronecker product of the label's letters.
pub fn label_matrix(label: &str, k: u8) -> Matrix {
    let mut chars = label.chars();
    let first = chars.next().expect("empty label");
    let m = chars.fold(letter_matrix(first), |acc, c| acc.kron(&letter_matrix(c)));
    m.scale(i_pow(k))
}

/// Dense operator of a weighted sum of labelled strings on `n` qubits.
pub fn sum_matrix<'a>(n: usize, terms: impl IntoIterator<Item = (Complex64, &'a str, u8)>) -> Matrix {
    terms
        .into_iter()
        .fold(Matrix::zeros(1 << n), |acc, (c, label, k)| {
            acc.add(&label_matrix(label, k).scale(c))
        })
}

/// Embed a single-qubit operator at qubit `q` of an `n`-qubit register.
fn embed(op: &Matrix, q: usize, n: usize) -> Matrix {
    let mut out: Option<Matrix> = None;
    for j in 0..n {
        let factor = if j == q { op.clone() } else { Matrix::identity(2) };
        out = Some(match out {
            None => factor,
            Some(acc) => acc.kron(&factor),
        });
    }
    out.expect("n >= 1")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DenseGate {
    H(usize),
    S(usize),
    Cnot(usize, usize),
    Cz(usize, usize),
}

/// Unitary of a Clifford gate on `n` qubits.
pub fn clifford_matrix(gate: DenseGate, n: usize) -> Matrix {
    let h = 1.0 / 2f64.sqrt();
    let z = ZERO;
    let p0 = Matrix::from_rows(&[&[ONE, z], &[z, z]]);
    let p1 = Matrix::from_rows(&[&[z, z], &[z, ONE]]);
    match gate {
        DenseGate::H(q) => {
            let hm = Matrix::from_rows(&[
                &[Complex64::new(h, 0.0), Complex64::new(h, 0.0)],
                &[Complex64::new(h, 0.0), Complex64::new(-h, 0.0)],
            ]);
            embed(&hm, q, n)
        }
        DenseGate::S(q) => embed(&Matrix::from_rows(&[&[ONE, z], &[z, I]]), q, n),
        DenseGate::Cnot(c, t) => embed(&p0, c, n)
            .add(&embed(&p1, c, n).matmul(&embed(&letter_matrix('X'), t, n))),
        DenseGate::Cz(c, t) => embed(&p0, c, n)
            .add(&embed(&p1, c, n).matmul(&embed(&letter_matrix('Z'), t, n))),
    }
}

/// `exp(-i theta/2 P) = cos(theta/2) I - i sin(theta/2) P` for an involutory `P`.
pub fn pauli_rotation(p: &Matrix, theta: f64) -> Matrix {
    let (s, c) = (theta / 2.0).sin_cos();
    Matrix::identity(p.dim())
        .scale(Complex64::new(c, 0.0))
        .add(&p.scale(Complex64::new(0.0, -s)))
}

/// Recover `(label, k)` such that `m == i^k * label` to within `tol`, or
/// `None` when `m` is not a phased Pauli string.
pub fn decompose_pauli(m: &Matrix, n: usize, tol: f64) -> Option<(String, u8)> {
    let dim = m.dim();
    assert_eq!(dim, 1 << n);
    let col = (0..dim).find(|&c| m.get(0, c).norm() > 0.5)?;
    let lead = m.get(0, col);
    let mut label = String::with_capacity(n);
    let mut y_count = 0u32;
    for q in 0..n {
        let bit = 1usize << (n - 1 - q);
        let x = col & bit != 0;
        let ratio = m.get(bit, bit ^ col) / lead;
        let z = ratio.re < 0.0;
        label.push(match (x, z) {
            (false, false) => 'I',
            (true, false) => 'X',
            (true, true) => {
                y_count += 1;
                'Y'
            }
            (false, true) => 'Z',
        });
    }
    // Row 0 of Y is (0, -i); the other letters contribute +1.
    let letters_lead = i_pow(((3 * y_count) % 4) as u8);
    let phase = lead / letters_lead;
    let k = (0..4u8).find(|&k| (i_pow(k) - phase).norm() <= tol)?;
    if label_matrix(&label, k).approx_eq(m, tol) {
        Some((label, k))
    } else {
        None
    }
}
