# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The MecGame Authors
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

"""
Pure numerical layer: channel/coverage model, demand model, potential game, particle swarm and allocation.

Modules are imported explicitly, e.g. ``from mecgame.core import demand``.
"""

from .errors import ArgumentError, DomainError

__all__ = [
    'ArgumentError',
    'DomainError',
    ]
