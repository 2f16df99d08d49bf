use crate::error::Result;
use crate::exact::{int, IntMatrix, Integer};

/// Trace type of an element of `SL_2(Z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sl2Class {
    /// Finite order; the order is one of 1, 2, 3, 4, 6.
    Elliptic {
        order: u32,
    },
    /// `|tr| = 2` and not `±I`; `sign = tr / 2`.
    Parabolic {
        sign: i8,
    },
    Hyperbolic,
}

impl Sl2Class {
    pub fn name(&self) -> &'static str {
        match self {
            Sl2Class::Elliptic { .. } => "elliptic",
            Sl2Class::Parabolic { .. } => "parabolic",
            Sl2Class::Hyperbolic => "hyperbolic",
        }
    }
}

/// Result of a bounded search for `g^k = I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(u32),
    /// Proven infinite (2x2 case, where torsion never exceeds order 6).
    Infinite,
    /// No power up to `cap` is the identity; says nothing about finiteness.
    CapExceeded {
        cap: u32,
    },
}

impl Order {
    pub fn finite(&self) -> Option<u32> {
        match self {
            Order::Finite(k) => Some(*k),
            _ => None,
        }
    }
}

/// Torsion in `GL_2(Z)` has order at most 6, so 12 powers decide the question.
pub const SL2_ORDER_BOUND: u32 = 12;

/// Default search cap for matrices larger than 2x2.
pub const DEFAULT_ORDER_CAP: u32 = 24;

pub fn order_of(g: &IntMatrix) -> Result<Order> {
    order_of_with_cap(g, DEFAULT_ORDER_CAP)
}

/// Smallest `k` with `g^k = I`. For 2x2 input the cap is ignored and a
/// miss within [`SL2_ORDER_BOUND`] is reported as [`Order::Infinite`].
pub fn order_of_with_cap(g: &IntMatrix, cap: u32) -> Result<Order> {
    g.require_unimodular()?;
    let two_by_two = g.rows() == 2;
    let cap = if two_by_two { SL2_ORDER_BOUND } else { cap };
    let mut p = g.clone();
    for k in 1..=cap {
        if p.is_identity() {
            return Ok(Order::Finite(k));
        }
        p = &p * g;
    }
    Ok(if two_by_two {
        Order::Infinite
    } else {
        Order::CapExceeded { cap }
    })
}

pub fn classify_sl2(g: &IntMatrix) -> Result<Sl2Class> {
    g.require_size(2)?;
    g.require_det(1)?;
    let tr = g.trace();
    let two = int(2);
    let abs_tr = if tr < Integer::ZERO { -tr.clone() } else { tr.clone() };
    let central = g.is_identity() || g.neg().is_identity();
    if central || abs_tr < two {
        let Order::Finite(order) = order_of(g)? else {
            unreachable!("|tr| < 2 in SL_2(Z) forces finite order");
        };
        return Ok(Sl2Class::Elliptic { order });
    }
    if abs_tr == two {
        return Ok(Sl2Class::Parabolic {
            sign: if tr > Integer::ZERO { 1 } else { -1 },
        });
    }
    Ok(Sl2Class::Hyperbolic)
}
