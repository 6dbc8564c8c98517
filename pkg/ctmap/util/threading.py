# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import threading


class ErrorPropagatingThread(threading.Thread):
    """A thread whose ``join`` returns the target's result or re-raises."""

    def run(self):
        self.exc = None
        self.ret = None
        try:
            self.ret = self._target(*self._args, **self._kwargs)
        except BaseException as e:
            self.exc = e

    def join(self):
        super(ErrorPropagatingThread, self).join()

        if self.exc:
            raise self.exc

        return self.ret


def run_all(func, items):
    """Call ``func`` on every item in its own thread; results keep order."""
    threads = [ErrorPropagatingThread(target=func, args=(item,)) for item in items]
    for t in threads:
        t.start()
    return [t.join() for t in threads]
