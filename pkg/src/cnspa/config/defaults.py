"""Default scenario values (the canonical simulation parameter table)."""

from __future__ import annotations

from cnspa.units import dbm_to_watt

BANDWIDTH_HZ = 10e6
NOISE_PSD_DBM_PER_HZ = -174.0
NUM_NODES = 16
PATHLOSS_INTERCEPT_DB = 103.8
PATHLOSS_SLOPE_DB = 21.0
NODE_DENSITY_PER_KM2 = 50.0
REGION_D1_KM = 1.0
REGION_D2_KM = 1.0
P_IDLE_W = 10e-3
P_BASE_W = 50e-3
# 2 mW per Mbps expressed in W per bit/s
DYNAMIC_CIRCUIT_EPS = 2e-3 / 1e6
P_MAX_DBM = 46.0
P_MAX_W = dbm_to_watt(P_MAX_DBM)
ETA_MAX = 0.35
ETPA_A = 0.0082
I_OUT_W = 0.0
MIN_DISTANCE_M = 10.0

DEFAULT_SE_GRID = (1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0)
DEFAULT_SE = 4.0
DEFAULT_TRIALS = 500
DEFAULT_SEED = 20240601
