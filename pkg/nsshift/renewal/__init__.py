from .functions import (
    RenewalFunction,
    TailClass,
    geometric_renewal,
    log_renewal,
    renewal_by_name,
    renewal_sequence,
    table_renewal,
)
from .sequences import (
    interarrival_from_renewal,
    renewal_from_interarrival,
    simulate_renewal,
)
from .verdicts import (
    SeriesVerdict,
    aperiodicity_check,
    log_convexity_check,
    null_recurrence_verdict,
    pwm_criterion,
)
