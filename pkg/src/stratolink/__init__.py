"""Desk-scale simulator for an on-demand HAPS emergency network."""
from .scenario import (Band, Condition, ConfigError, LinkBudgetResult, LinkSpec, Node, NodeKind,
                       Scenario, WeatherState, default_linkspec, load_scenario)

__all__ = [
    "Band", "Condition", "ConfigError", "LinkBudgetResult", "LinkSpec", "Node", "NodeKind",
    "Scenario", "WeatherState", "default_linkspec", "load_scenario",
]
