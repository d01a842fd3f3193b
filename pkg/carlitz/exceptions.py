# Copyright (c) 2026 The Carlitz Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
# implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from oslo_log import log as logging

from carlitz.i18n import _


LOG = logging.getLogger(__name__)


class CarlitzException(Exception):
    """Base Carlitz Exception.

    To correctly use this class, inherit from it and define
    a 'msg_fmt' and 'code' properties. 'code' is the exit status the
    command line front end reports when the exception reaches it.
    """
    msg_fmt = _("An unknown exception occurred")
    code = 1

    def __init__(self, message=None, **kwargs):
        self.kwargs = kwargs

        if 'code' not in self.kwargs:
            self.kwargs['code'] = self.code

        if not message:
            try:
                message = self.msg_fmt % kwargs
            except KeyError:
                # kwargs doesn't match a variable in the message
                # log the issue and the kwargs
                LOG.exception('Exception in string format operation')
                for name, value in kwargs.items():
                    LOG.error("%(name)s: %(value)s",
                              {'name': name, 'value': value})

                message = self.msg_fmt

        super(CarlitzException, self).__init__(message)


class InvalidInput(CarlitzException):
    msg_fmt = _("Invalid value for %(name)s: %(value)s")


class OutOfRange(InvalidInput):
    msg_fmt = _("%(name)s = %(value)s is out of range, expected %(bounds)s")


class BadBase(InvalidInput):
    msg_fmt = _("Base %(base)s is invalid, a base must be at least 2")


class NotSquare(InvalidInput):
    msg_fmt = _("Expected a square matrix, got %(rows)s x %(cols)s")


class SizeLimit(CarlitzException):
    code = 2
    msg_fmt = _("%(what)s needs %(size)s points, above the size limit "
                "%(limit)s")


class PropertyViolation(CarlitzException):
    code = 3
    msg_fmt = _("Property '%(prop)s' failed to verify: %(detail)s")


class RowSumViolation(PropertyViolation):
    msg_fmt = _("Row %(row)s of the valuation matrix for q=%(q)s, s=%(s)s "
                "sums to %(total)s instead of 0")
