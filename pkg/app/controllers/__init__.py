from app.config.command_router import LOG_LEVEL, CommandRouter
from app.controllers import algebra_controller, fuzz_controller, tqft_controller

# Main command router; --log-level comes before the command name
cli_router = CommandRouter(global_options=[LOG_LEVEL])

# Algebra commands (check, decompose, classify)
cli_router.include_router(algebra_controller.router)
# Evaluation commands (eval, invariant, sumcheck, counterexample)
cli_router.include_router(tqft_controller.router)
# Seeded sweeps
cli_router.include_router(fuzz_controller.router)
