# Copyright 2026 The noonlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Conditional generation of two-mode path-entangled photon states."""

import json as _json

from noonlab._core import *  # noqa: F401,F403
from noonlab._core import oracle_check_json as _oracle_check_json


def oracle_check(seed=1, trials=10, perturb=False):
    """Runs the exact-vs-oracle comparisons and returns the report as a dict."""
    return _json.loads(_oracle_check_json(seed=seed, trials=trials, perturb=perturb))
