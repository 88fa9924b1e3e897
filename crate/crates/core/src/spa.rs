//! Sum-product (belief propagation) decoding in the LLR domain.
//!
//! LLRs follow the `log p(0)/p(1)` convention: positive favours bit 0.
//! Messages live on the edges of `H` in the edge numbering of
//! [`ParityCheckMatrix::edge_range`]. The schedule is flooding: every check
//! updates, then totals and the hard decision are formed and the syndrome is
//! tested, then every variable updates.

use crate::bits::BitBlock;
use crate::error::{Error, Result};
use crate::gf2::ParityCheckMatrix;

/// Saturation bound applied to channel LLRs and to every message.
pub const LLR_CLAMP: f64 = 38.0;

/// Margin keeping inverse-tanh arguments inside (-1, 1).
pub const ATANH_EPS: f64 = 1e-15;

pub const DEFAULT_MAX_ITERATIONS: usize = 100;

#[inline]
pub fn clamp_llr(l: f64) -> f64 {
    if l.is_nan() {
        0.0
    } else {
        l.clamp(-LLR_CLAMP, LLR_CLAMP)
    }
}

/// `(p(0), p(1))` for an LLR.
pub fn llr_to_prob(l: f64) -> (f64, f64) {
    let e = (-clamp_llr(l)).exp();
    (1.0 / (1.0 + e), e / (1.0 + e))
}

/// `log p(0)/p(1)` for a probability of the bit being one.
pub fn prob_to_llr(p1: f64) -> f64 {
    clamp_llr(((1.0 - p1) / p1).ln())
}

/// Probability that a parity check forces a one, given the probabilities
/// `p(1)` of the other bits in the check: `1/2 - 1/2 ∏(1 - 2p)`.
pub fn prob_ext(p_ones: &[f64]) -> f64 {
    0.5 - 0.5 * p_ones.iter().map(|p| 1.0 - 2.0 * p).product::<f64>()
}

/// Which algebraic form the check-node update uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CheckForm {
    /// `2 atanh ∏ tanh(L/2)`.
    #[default]
    Tanh,
    /// `∏ sign(L) · 2 atanh exp Σ log tanh(|L|/2)`.
    SignMagnitude,
}

impl CheckForm {
    /// Extrinsic check-to-variable messages for one check: `out[k]` is
    /// computed from every incoming message except `incoming[k]`.
    pub fn extrinsic(self, incoming: &[f64], out: &mut [f64]) {
        assert_eq!(incoming.len(), out.len());
        match self {
            CheckForm::Tanh => extrinsic_tanh(incoming, out),
            CheckForm::SignMagnitude => extrinsic_signmag(incoming, out),
        }
        apply_bounds(incoming, out);
    }

    /// Check-node output from exactly the given messages.
    pub fn combine(self, incoming: &[f64]) -> f64 {
        match self {
            CheckForm::Tanh => check_update_tanh(incoming),
            CheckForm::SignMagnitude => check_update_signmag(incoming),
        }
    }
}

/// Product-of-tanh state: `prod = ∏ tanh(M/2)` and its complement
/// `comp = 1 - prod`, the latter kept accurate near saturation.
#[derive(Clone, Copy)]
struct TanhProd {
    prod: f64,
    comp: f64,
}

impl TanhProd {
    const ONE: TanhProd = TanhProd { prod: 1.0, comp: 0.0 };

    fn of(l: f64) -> Self {
        let m = clamp_llr(l).abs();
        TanhProd {
            prod: (0.5 * m).tanh(),
            // 1 - tanh(m/2) = 2 / (1 + e^m)
            comp: 2.0 / (1.0 + m.exp()),
        }
    }

    fn mul(self, o: TanhProd) -> Self {
        TanhProd {
            prod: self.prod * o.prod,
            comp: self.comp + o.comp * (1.0 - self.comp),
        }
    }

    /// `2 atanh(prod)` with the argument kept below `1 - ATANH_EPS`.
    fn two_atanh(self) -> f64 {
        if self.prod < 0.5 {
            2.0 * self.prod.atanh()
        } else {
            self.prod.ln_1p() - self.comp.max(ATANH_EPS).ln()
        }
    }
}

fn sign_of(l: f64) -> f64 {
    if l < 0.0 {
        -1.0
    } else {
        1.0
    }
}

/// `log tanh(m/2)` for `m >= 0`; `-inf` at zero.
fn log_tanh_half(m: f64) -> f64 {
    let e = (-m).exp();
    log_one_minus(e, -m) - e.ln_1p()
}

/// `ln(1 - e^x)` for `x <= 0`, given `ex = e^x`.
fn log_one_minus(ex: f64, x: f64) -> f64 {
    if ex < 0.5 {
        (-ex).ln_1p()
    } else {
        (-x.exp_m1()).ln()
    }
}

/// `2 atanh(exp(s))` for `s <= 0`.
fn two_atanh_exp(s: f64) -> f64 {
    if s == f64::NEG_INFINITY {
        return 0.0;
    }
    let e = s.exp();
    e.ln_1p() - log_one_minus(e, s).max(ATANH_EPS.ln())
}

pub fn check_update_tanh(incoming: &[f64]) -> f64 {
    let sign: f64 = incoming.iter().map(|&l| sign_of(l)).product();
    let p = incoming
        .iter()
        .fold(TanhProd::ONE, |acc, &l| acc.mul(TanhProd::of(l)));
    bound(sign * p.two_atanh(), incoming.iter().map(|l| clamp_llr(*l).abs()))
}

pub fn check_update_signmag(incoming: &[f64]) -> f64 {
    let sign: f64 = incoming.iter().map(|&l| sign_of(l)).product();
    let s: f64 = incoming
        .iter()
        .map(|&l| log_tanh_half(clamp_llr(l).abs()))
        .sum();
    bound(sign * two_atanh_exp(s), incoming.iter().map(|l| clamp_llr(*l).abs()))
}

/// Magnitude never exceeds the weakest input, nor the clamp.
fn bound(e: f64, mags: impl Iterator<Item = f64>) -> f64 {
    let limit = mags.fold(LLR_CLAMP, f64::min);
    e.clamp(-limit, limit)
}

fn extrinsic_tanh(incoming: &[f64], out: &mut [f64]) {
    let n = incoming.len();
    let terms: Vec<TanhProd> = incoming.iter().map(|&l| TanhProd::of(l)).collect();
    let mut prefix = Vec::with_capacity(n);
    let mut acc = TanhProd::ONE;
    for t in &terms {
        prefix.push(acc);
        acc = acc.mul(*t);
    }
    let mut suffix = TanhProd::ONE;
    for k in (0..n).rev() {
        out[k] = prefix[k].mul(suffix).two_atanh();
        suffix = suffix.mul(terms[k]);
    }
}

fn extrinsic_signmag(incoming: &[f64], out: &mut [f64]) {
    let n = incoming.len();
    let terms: Vec<f64> = incoming
        .iter()
        .map(|&l| log_tanh_half(clamp_llr(l).abs()))
        .collect();
    let mut prefix = Vec::with_capacity(n);
    let mut acc = 0.0;
    for &t in &terms {
        prefix.push(acc);
        acc += t;
    }
    let mut suffix = 0.0;
    for k in (0..n).rev() {
        out[k] = two_atanh_exp(prefix[k] + suffix);
        suffix += terms[k];
    }
}

/// Attaches the leave-one-out sign and applies the magnitude bounds to the
/// unsigned magnitudes sitting in `out`.
fn apply_bounds(incoming: &[f64], out: &mut [f64]) {
    let mut sign = 1.0;
    let (mut min1, mut min2, mut argmin) = (f64::INFINITY, f64::INFINITY, usize::MAX);
    for (k, &l) in incoming.iter().enumerate() {
        sign *= sign_of(l);
        let m = clamp_llr(l).abs();
        if m < min1 {
            min2 = min1;
            min1 = m;
            argmin = k;
        } else if m < min2 {
            min2 = m;
        }
    }
    for (k, (o, &l)) in out.iter_mut().zip(incoming).enumerate() {
        let limit = if k == argmin { min2 } else { min1 }.min(LLR_CLAMP);
        *o = (sign * sign_of(l)) * o.min(limit);
    }
}

/// Channel LLR `-4y/N0` for a BPSK sample under AWGN of variance `N0/2`.
pub fn init_channel_llr(y: f64, n0: f64) -> Result<f64> {
    if n0.is_nan() || n0 <= 0.0 {
        return Err(Error::NonPositiveNoise(n0));
    }
    Ok(clamp_llr(-4.0 * y / n0))
}

/// Variable-to-check message: the channel LLR plus the messages from every
/// other attached check.
pub fn variable_update(others: &[f64], channel: f64) -> f64 {
    clamp_llr(others.iter().sum::<f64>() + channel)
}

/// A-posteriori LLR of a bit: the channel LLR plus all check messages.
pub fn total_llr(all: &[f64], channel: f64) -> f64 {
    all.iter().sum::<f64>() + channel
}

/// One for a strictly negative LLR; a zero LLR decides zero.
#[inline]
pub fn hard_decision(l: f64) -> bool {
    l < 0.0
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecodeResult {
    pub bits: BitBlock,
    /// The decided word satisfies every parity check.
    pub converged: bool,
    /// Decoding iterations run; zero when the channel decision was already
    /// a codeword.
    pub iterations: usize,
    pub total_llrs: Vec<f64>,
}

/// Message storage for one decode against a fixed `H`.
#[derive(Clone, Debug)]
pub struct DecoderWorkspace<'h> {
    h: &'h ParityCheckMatrix,
    form: CheckForm,
    max_iterations: usize,
    iteration: usize,
    /// `E_{j,i}`, one per edge.
    check_to_var: Vec<f64>,
    /// `L(P_{j,i})`, one per edge.
    var_to_check: Vec<f64>,
    channel: Vec<f64>,
    total: Vec<f64>,
    scratch: Vec<f64>,
}

impl<'h> DecoderWorkspace<'h> {
    pub fn new(h: &'h ParityCheckMatrix, form: CheckForm, max_iterations: usize) -> Result<Self> {
        if max_iterations == 0 {
            return Err(Error::Config("max_iterations must be at least 1".into()));
        }
        let e = h.num_edges();
        Ok(DecoderWorkspace {
            h,
            form,
            max_iterations,
            iteration: 0,
            check_to_var: vec![0.0; e],
            var_to_check: vec![0.0; e],
            channel: vec![0.0; h.cols()],
            total: vec![0.0; h.cols()],
            scratch: Vec::new(),
        })
    }

    /// Loads channel LLRs and seeds every edge message with them.
    pub fn init(&mut self, channel_llrs: &[f64]) -> Result<()> {
        let m = self.h.cols();
        if channel_llrs.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                actual: channel_llrs.len(),
            });
        }
        for (c, &l) in self.channel.iter_mut().zip(channel_llrs) {
            *c = clamp_llr(l);
        }
        for e in 0..self.h.num_edges() {
            self.var_to_check[e] = self.channel[self.h.edge_var(e)];
        }
        self.check_to_var.fill(0.0);
        self.total.copy_from_slice(&self.channel);
        self.iteration = 0;
        Ok(())
    }

    pub fn check_step(&mut self) {
        for j in 0..self.h.rows() {
            let range = self.h.edge_range(j);
            self.scratch.clear();
            self.scratch.resize(range.len(), 0.0);
            self.form
                .extrinsic(&self.var_to_check[range.clone()], &mut self.scratch);
            for (x, &v) in self.check_to_var[range].iter_mut().zip(&self.scratch) {
                *x = clamp_llr(v);
            }
        }
    }

    pub fn update_totals(&mut self) {
        for i in 0..self.h.cols() {
            self.total[i] = self.channel[i]
                + self
                    .h
                    .var_edges(i)
                    .iter()
                    .map(|&e| self.check_to_var[e])
                    .sum::<f64>();
        }
    }

    pub fn variable_step(&mut self) {
        for i in 0..self.h.cols() {
            let edges = self.h.var_edges(i);
            for &e in edges {
                let others: f64 = edges
                    .iter()
                    .filter(|&&f| f != e)
                    .map(|&f| self.check_to_var[f])
                    .sum();
                self.var_to_check[e] = clamp_llr(others + self.channel[i]);
            }
        }
    }

    pub fn decision(&self) -> BitBlock {
        self.total.iter().map(|&l| hard_decision(l)).collect()
    }

    /// One full iteration without the syndrome test.
    pub fn iterate(&mut self) {
        self.check_step();
        self.update_totals();
        self.variable_step();
        self.iteration += 1;
    }

    /// Runs the decoding loop from the current (freshly initialised) state.
    pub fn run(&mut self) -> DecodeResult {
        let mut bits = self.decision();
        let mut converged = self.is_codeword(&bits);
        while !converged && self.iteration < self.max_iterations {
            self.check_step();
            self.update_totals();
            self.iteration += 1;
            bits = self.decision();
            converged = self.is_codeword(&bits);
            if !converged {
                self.variable_step();
            }
        }
        DecodeResult {
            bits,
            converged,
            iterations: self.iteration,
            total_llrs: self.total.clone(),
        }
    }

    pub fn decode(&mut self, channel_llrs: &[f64]) -> Result<DecodeResult> {
        self.init(channel_llrs)?;
        Ok(self.run())
    }

    fn is_codeword(&self, bits: &BitBlock) -> bool {
        self.h.is_codeword(bits).expect("decision length equals H columns")
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    pub fn check_to_var(&self) -> &[f64] {
        &self.check_to_var
    }

    pub fn var_to_check(&self) -> &[f64] {
        &self.var_to_check
    }

    pub fn channel(&self) -> &[f64] {
        &self.channel
    }

    pub fn totals(&self) -> &[f64] {
        &self.total
    }
}

/// Decodes one frame of channel LLRs.
pub fn decode(
    channel_llrs: &[f64],
    h: &ParityCheckMatrix,
    max_iterations: usize,
    form: CheckForm,
) -> Result<DecodeResult> {
    DecoderWorkspace::new(h, form, max_iterations)?.decode(channel_llrs)
}
