# src/rif_kit/observability/names.py

"""Standard metric names for rif-kit observability.

Use these constants instead of hardcoded strings for consistency
across the codebase.

Note: All duration metrics are in milliseconds by convention.
"""

# ============================================================================
# Market Data Metrics
# ============================================================================

# Duration
MARKET_DATA_PARSE_DURATION = "market_data_parse_duration"

# Counters
MARKET_DATA_BARS_PARSED = "market_data_bars_parsed"
MARKET_DATA_DAYS_INCOMPLETE = "market_data_days_incomplete"


# ============================================================================
# Labeling Metrics
# ============================================================================

# Duration
LABELING_DURATION = "labeling_duration"

# Counters
LABELING_DAYS_TOTAL = "labeling_days_total"
LABELING_POSITIONS_TOTAL = "labeling_positions_total"


# ============================================================================
# Environment Metrics
# ============================================================================

# Counters
ENV_STEPS_TOTAL = "env_steps_total"
ENV_EPISODES_TOTAL = "env_episodes_total"
ENV_TRADES_TOTAL = "env_trades_total"


# ============================================================================
# PPO Metrics
# ============================================================================

# Duration
PPO_ROLLOUT_DURATION = "ppo_rollout_duration"
PPO_UPDATE_DURATION = "ppo_update_duration"

# Counters
PPO_ITERATIONS_TOTAL = "ppo_iterations_total"
PPO_EARLY_STOPS_TOTAL = "ppo_early_stops_total"

# Gauges
PPO_VALIDATION_RETURN = "ppo_validation_return"
PPO_MEAN_REWARD = "ppo_mean_reward"


# ============================================================================
# Evaluation Metrics
# ============================================================================

# Duration
GRID_CELL_DURATION = "grid_cell_duration"

# Counters
GRID_CELLS_TOTAL = "grid_cells_total"
GRID_CELL_ERRORS_TOTAL = "grid_cell_errors_total"
REPORT_FILES_WRITTEN = "report_files_written"
