// C API; filled in once the core stabilizes.
