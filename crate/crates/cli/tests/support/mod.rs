pub mod reynolds;
