//! Self-contained numerical kernels: Airy functions, an adaptive
//! Runge-Kutta integrator, Gauss-Kronrod quadrature and scalar
//! minimization/root finding.

pub mod airy;
mod airy_tables;
pub mod ode;
pub mod optimize;
pub mod quad;
