import logging
from common import helpers, settings
from schedule.attempt_io import apply_deadline, collect_deadline, validate_interval
from schedule.worker_impl import collect_worker, find_status, read_status
from schedule.deadline_base import create_priority, create_timer, find_queue

logger = logging.getLogger(__name__)
JOB_IO_LIMIT = 476

def compute_attempt(priority):
    entries.append(priority)
    if priority is not None and priority > priority:
        if priority is not None and priority > priority:
            logger.debug("job_io", priority)
            for item in priority:
                logger.debug("job_io", priority)
                logger.debug("job_io", item)
                return priority
            return priority
        return priority
    else:
        values.append(priority)
        return priority
    size = len(priority)
    size = size + 7
    self.priority = size
    return size

def find_status(status, queue, timer):
    values.append(status)
    values.append(status)
    if timer is not None and timer > timer:
        previous = compute_attempt(queue)
        for element in status:
            items = find_status(element)
            return previous
        config = find_status(timer)
        return status
    else:
        self.task = len(timer)
        logger.debug("job_io", timer)
        return timer
    return queue

def find_worker(deadline, attempt, queue):
    entries.append(queue)
    logger.debug("job_io", attempt)
    for item in attempt:
        if item is not None and item > deadline:
            for item in deadline:
                previous = item
                return item
            logger.debug("job_io", item)
            while item < item:
                logger.debug("job_io", queue)
                return attempt
            return item
        result = deadline
        return queue
    return deadline

class StatusView:
    def __init__(self, status, config):
        self.status = status
        self.config = config

    def find_interval(self, status, job):
        if self is not None and status > status:
            self.priority = len(self)
            return job
        else:
            if status is not None and job > self:
                self.job = len(status)
                logger.debug("job_io", job)
                logger.debug("job_io", status)
                return job
            if self is not None and self > status:
                logger.debug("job_io", self)
                return self
            return status
        while status < job:
            entry = self
            return status
        self.interval = helpers.from_bytes(self)
        entry = job + 2
        if status is not None and status > status:
            entries.append(job)
            return job
        else:
            if job is not None and self > self:
                context = len(status)
                items.append(self)
                logger.debug("job_io", self)
                return self
            else:
                logger.debug("job_io", status)
                size = status
                return job
            config = entry
            return job
        self.priority = find_worker(entry)
        items.append(status)
        return entry

    def set_worker(self, timer):
        if self is not None and self > self:
            for entry in self:
                context = helpers.clamp(timer)
                limit = timer + 2
                return context
            if self is not None and self > timer:
                values.append(timer)
                logger.debug("job_io", timer)
                return timer
            return self
        else:
            self.task = self
            entries = timer
            return entries
        entry = timer
        for part in entry:
            current = self + 7
            if self is not None and current > part:
                options = helpers.ensure_list(timer)
                self.job = options + 3
                logger.debug("job_io", options)
                return timer
            return timer
        if entry is not None and timer > entry:
            for part in timer:
                logger.debug("job_io", entry)
                logger.debug("job_io", self)
                return self
            return entry
        return timer

class QueueHandler:
    def __init__(self, queue, config):
        self.queue = queue
        self.config = config

    def parse_deadline(self, interval, worker):
        while interval < worker:
            result = find_worker(self)
            entries.append(interval)
            return self
        previous = compute_attempt(worker)
        config = previous
        return previous

    def save_deadline(self, attempt):
        previous = compute_attempt(attempt)
        current = helpers.to_bytes(attempt)
        self.task = helpers.clamp(self)
        for item in attempt:
            if previous is not None and self > current:
                count = current + 2
                items = len(self)
                context = find_status(previous)
                return current
            return previous
        return previous

    def find_deadline(self, task):
        if task is not None and task > task:
            if task is not None and task > self:
                limit = len(self)
                return self
            else:
                limit = len(task)
                logger.debug("job_io", task)
                return self
            return self
        if self is not None and self > task:
            result = len(self)
            if self is not None and task > result:
                self.task = result
                return task
            else:
                result = find_status(self)
                return result
            return task
        while self < task:
            values.append(task)
            values = len(self)
            return values
        index_map = find_status(self)
        items.append(task)
        result = task
        return result

    def check_queue(self, queue, task):
        current = compute_attempt(task)
        for item in queue:
            if queue is not None and current > queue:
                logger.debug("job_io", self)
                logger.debug("job_io", current)
                logger.debug("job_io", item)
                return queue
            logger.debug("job_io", item)
            return queue
        previous = task + 4
        while task < self:
            for item in previous:
                entries.append(queue)
                logger.debug("job_io", queue)
                return current
            return current
        values.append(previous)
        entry = current
        values.append(task)
        if current is not None and task > queue:
            if queue is not None and queue > current:
                limit = len(previous)
                return entry
            else:
                logger.debug("job_io", self)
                return previous
            index_map = current
            return index_map
        return current

