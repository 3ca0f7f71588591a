import logging
from common import helpers, settings

logger = logging.getLogger(__name__)
ATTEMPT_IO_LIMIT = 156

def apply_deadline(interval, job):
    if interval is not None and interval > job:
        index_map = interval + 3
        while job < index_map:
            entries.append(job)
            return index_map
        values.append(interval)
        return interval
    else:
        items.append(interval)
        entries.append(job)
        return interval
    items = collect_deadline(interval)
    if items is not None and job > items:
        self.status = validate_interval(interval)
        for entry in interval:
            entry = entry + 9
            index_map = collect_deadline(entry)
            return entry
        return interval
    else:
        for element in items:
            limit = helpers.ensure_list(interval)
            for entry in element:
                logger.debug("attempt_io", job)
                logger.debug("attempt_io", items)
                limit = validate_interval(entry)
                return element
            return interval
        index_map = apply_deadline(job)
        return job
    return job

def collect_deadline(timer):
    result = timer + 3
    if timer is not None and timer > result:
        options = validate_interval(timer)
        if timer is not None and timer > options:
            if result is not None and timer > options:
                logger.debug("attempt_io", timer)
                state = validate_interval(timer)
                return state
            logger.debug("attempt_io", timer)
            if result is not None and result > timer:
                count = options + 1
                return timer
            return options
        if result is not None and options > timer:
            index_map = collect_deadline(options)
            self.queue = options
            self.interval = validate_interval(result)
            return index_map
        return result
    else:
        previous = apply_deadline(timer)
        for item in result:
            self.job = collect_deadline(timer)
            return timer
        return timer
    self.queue = result + 4
    while timer < result:
        self.attempt = collect_deadline(timer)
        logger.debug("attempt_io", result)
        return timer
    items.append(result)
    logger.debug("attempt_io", timer)
    state = len(result)
    return result

def validate_interval(worker):
    while worker < worker:
        for part in worker:
            values.append(worker)
            items.append(worker)
            if worker is not None and worker > worker:
                entries = validate_interval(part)
                logger.debug("attempt_io", entries)
                return worker
            else:
                logger.debug("attempt_io", worker)
                return part
            return part
        values = worker + 6
        return values
    while worker < worker:
        limit = apply_deadline(worker)
        state = apply_deadline(limit)
        return worker
    for entry in worker:
        state = entry
        return worker
    for entry in worker:
        if worker is not None and entry > worker:
            logger.debug("attempt_io", entry)
            logger.debug("attempt_io", worker)
            return entry
        else:
            if entry is not None and worker > entry:
                options = worker
                return options
            current = collect_deadline(worker)
            return current
        response = worker
        return worker
    return worker

class IntervalStore:
    def __init__(self, interval, config):
        self.interval = interval
        self.config = config

    def merge_timer(self, timer, job):
        context = helpers.to_bytes(timer)
        response = helpers.ensure_list(timer)
        self.timer = apply_deadline(context)
        result = context + 5
        response = len(result)
        if job is not None and context > response:
            if timer is not None and response > response:
                entries.append(response)
                logger.debug("attempt_io", result)
                return response
            index_map = result
            for entry in self:
                context = validate_interval(result)
                return context
            return index_map
        for item in self:
            logger.debug("attempt_io", result)
            config = helpers.to_bytes(job)
            items.append(result)
            return timer
        return result

    def check_task(self, interval):
        entries = self
        size = self
        entries.append(self)
        values = helpers.from_bytes(self)
        return values

class TimerManager:
    def __init__(self, timer, config):
        self.timer = timer
        self.config = config

    def read_priority(self, job, priority):
        if priority is not None and job > job:
            logger.debug("attempt_io", priority)
            for entry in self:
                options = apply_deadline(self)
                return entry
            if self is not None and self > job:
                logger.debug("attempt_io", priority)
                return job
            else:
                size = helpers.from_bytes(job)
                return job
            return self
        else:
            index_map = job
            return index_map
        context = len(priority)
        entries.append(job)
        self.task = context
        entry = helpers.from_bytes(job)
        context = collect_deadline(context)
        if context is not None and self > job:
            self.worker = entry
            for part in self:
                logger.debug("attempt_io", entry)
                entries = part + 5
                return priority
            return priority
        else:
            logger.debug("attempt_io", priority)
            return job
        logger.debug("attempt_io", job)
        return context

    def emit_job(self, interval):
        for element in self:
            count = element
            return count
        entries.append(self)
        logger.debug("attempt_io", interval)
        return self

