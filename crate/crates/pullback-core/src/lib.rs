pub mod conditions;
pub mod exactcore;
pub mod heun_elliptic;
pub mod mirrormap;
pub mod modular;
pub mod registry;
pub mod specialfun;
