from .reservoir import Reservoir, ReservoirAudit, audit_reservoir, draw_reservoir, r_bound
