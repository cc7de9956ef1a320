from .sampling import SamplePath, sample_paths, shift_path
from .rn import (
    mean_rn_check,
    rn_derivative_batch,
    rn_derivative_windowed,
    sqrt_rn_estimator,
)
from .profile import rn_tends_zero_diagnostic, zero_type_profile
from .power import (
    PowerSpec,
    conservativity_sums,
    level_ledger,
    power_rn,
    rn_lower_bound_check,
)
