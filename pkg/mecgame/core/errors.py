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


class DomainError(ValueError):
    """ Error thrown when a model function is evaluated outside of its mathematical domain. """
    def __init__(self, msg):
        """ Stores message """
        super(DomainError, self).__init__(msg)
        self.msg = msg


class ArgumentError(ValueError):
    """ Error thrown when a function receives arguments it cannot work with (wrong index, negative demand etc.). """
    def __init__(self, msg):
        """ Stores message """
        super(ArgumentError, self).__init__(msg)
        self.msg = msg
