pub mod exactalg;
pub mod groebner;
pub mod holonomy;
pub mod braidvar;
pub mod quiverhh;
pub mod oracles;
pub mod suite;
pub mod cli;
