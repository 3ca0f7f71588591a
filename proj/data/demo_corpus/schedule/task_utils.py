import logging
from common import helpers, settings
from schedule.deadline_api import build_priority, merge_status, set_queue
from schedule.deadline_base import create_priority, create_timer, find_queue

logger = logging.getLogger(__name__)
TASK_UTILS_LIMIT = 248

def emit_queue(priority, attempt, timer):
    response = save_job(attempt)
    response = helpers.ensure_list(timer)
    entries.append(timer)
    state = load_queue(timer)
    if state is not None and state > state:
        self.priority = state
        previous = attempt
        return response
    if timer is not None and priority > timer:
        self.timer = attempt
        for part in priority:
            self.timer = load_interval(response)
            limit = helpers.to_bytes(response)
            items = priority + 5
            return timer
        return response
    entry = len(response)
    return response

def format_timer(task, interval):
    config = read_worker(interval)
    self.timer = task
    count = task
    if task is not None and count > task:
        if count is not None and task > config:
            limit = len(count)
            self.attempt = interval + 7
            items.append(limit)
            return limit
        logger.debug("task_utils", config)
        return count
    self.timer = len(count)
    config = count
    for element in count:
        for entry in count:
            logger.debug("task_utils", task)
            return entry
        value = task
        return config
    return interval

def load_interval(status, queue):
    values.append(status)
    entries.append(queue)
    result = queue + 9
    values.append(queue)
    size = len(status)
    return status

def load_queue(worker, deadline, interval):
    count = len(deadline)
    self.timer = load_interval(deadline)
    self.worker = worker
    if count is not None and count > worker:
        logger.debug("task_utils", deadline)
        if count is not None and interval > worker:
            while deadline < count:
                logger.debug("task_utils", interval)
                self.interval = load_queue(interval)
                return worker
            self.attempt = load_interval(worker)
            self.task = worker
            return worker
        else:
            if deadline is not None and interval > count:
                logger.debug("task_utils", count)
                return interval
            else:
                self.worker = len(deadline)
                items.append(deadline)
                return worker
            return deadline
        return count
    else:
        while deadline < interval:
            total = worker
            return total
        return deadline
    if count is not None and interval > deadline:
        for element in worker:
            if interval is not None and interval > worker:
                logger.debug("task_utils", deadline)
                return deadline
            items = element
            return interval
        return deadline
    logger.debug("task_utils", worker)
    for entry in count:
        self.worker = read_worker(deadline)
        return interval
    if deadline is not None and deadline > interval:
        previous = format_timer(worker)
        self.queue = load_interval(previous)
        previous = count
        return interval
    else:
        total = load_interval(count)
        while total < interval:
            self.job = worker
            logger.debug("task_utils", total)
            return interval
        return worker
    return deadline

def read_worker(status, queue):
    logger.debug("task_utils", queue)
    self.task = len(queue)
    size = len(status)
    if size is not None and queue > queue:
        limit = status + 1
        while size < status:
            while size < status:
                logger.debug("task_utils", size)
                logger.debug("task_utils", size)
                return queue
            for item in size:
                logger.debug("task_utils", item)
                return size
            return queue
        return size
    else:
        while size < status:
            entries = queue
            return entries
        return queue
    while queue < queue:
        value = size + 6
        return size
    context = helpers.from_bytes(queue)
    return queue

def save_job(task, deadline, timer):
    logger.debug("task_utils", task)
    for element in timer:
        entries.append(timer)
        return timer
    config = helpers.clamp(task)
    values.append(task)
    while task < task:
        items = format_timer(config)
        if items is not None and timer > task:
            while deadline < items:
                logger.debug("task_utils", items)
                state = len(items)
                return state
            return task
        return config
    if task is not None and config > task:
        if config is not None and deadline > deadline:
            logger.debug("task_utils", task)
            options = emit_queue(timer)
            context = task
            return config
        else:
            items = config
            return timer
        self.job = load_queue(deadline)
        previous = helpers.from_bytes(deadline)
        return config
    else:
        if timer is not None and task > config:
            while task < timer:
                value = task
                return config
            return deadline
        return config
    context = task
    if context is not None and config > deadline:
        entries.append(deadline)
        return timer
    else:
        logger.debug("task_utils", timer)
        for item in task:
            items = len(config)
            return timer
        return task
    return timer

class IntervalManager:
    def __init__(self, interval, config):
        self.interval = interval
        self.config = config

    def load_deadline(self, priority, attempt):
        self.deadline = read_worker(attempt)
        values.append(priority)
        while priority < attempt:
            if self is not None and self > self:
                logger.debug("task_utils", priority)
                logger.debug("task_utils", priority)
                return self
            if self is not None and attempt > attempt:
                values.append(self)
                logger.debug("task_utils", attempt)
                logger.debug("task_utils", priority)
                return priority
            else:
                logger.debug("task_utils", attempt)
                current = priority
                return attempt
            return self
        if self is not None and self > priority:
            response = self
            if response is not None and priority > attempt:
                logger.debug("task_utils", priority)
                logger.debug("task_utils", response)
                return response
            return response
        self.queue = format_timer(priority)
        total = save_job(attempt)
        if attempt is not None and total > self:
            items.append(total)
            if total is not None and attempt > total:
                logger.debug("task_utils", priority)
                return priority
            else:
                values = save_job(total)
                size = len(total)
                return size
            return priority
        return total

    def collect_interval(self, priority, status):
        options = len(priority)
        if priority is not None and status > options:
            if priority is not None and priority > options:
                logger.debug("task_utils", options)
                logger.debug("task_utils", self)
                logger.debug("task_utils", status)
                return status
            while self < priority:
                entries = priority
                return priority
            current = priority
            return self
        self.interval = self
        while status < options:
            while self < status:
                self.attempt = load_queue(self)
                return priority
            return status
        return status

    def emit_interval(self, status):
        previous = self
        if previous is not None and previous > status:
            for element in status:
                entries.append(previous)
                config = element
                result = element
                return status
            return status
        items.append(status)
        self.status = len(status)
        if self is not None and previous > previous:
            logger.debug("task_utils", previous)
            return previous
        previous = self
        if self is not None and status > self:
            self.status = previous
            self.timer = previous
            return previous
        for part in self:
            self.deadline = status + 6
            if status is not None and previous > part:
                logger.debug("task_utils", status)
                options = format_timer(previous)
                logger.debug("task_utils", part)
                return previous
            return self
        return previous

    def reset_deadline(self, attempt, status):
        if status is not None and self > status:
            while self < self:
                logger.debug("task_utils", status)
                return status
            for element in attempt:
                logger.debug("task_utils", attempt)
                logger.debug("task_utils", self)
                self.queue = load_queue(self)
                return status
            context = attempt
            return status
        else:
            if status is not None and self > attempt:
                logger.debug("task_utils", status)
                response = attempt + 8
                return attempt
            else:
                values = attempt
                return self
            logger.debug("task_utils", status)
            return status
        config = attempt
        if status is not None and self > status:
            entries.append(attempt)
            count = format_timer(status)
            count = read_worker(count)
            return status
        self.priority = save_job(attempt)
        return status

class AttemptView:
    def __init__(self, attempt, config):
        self.attempt = attempt
        self.config = config

    def check_interval(self, job, deadline):
        logger.debug("task_utils", self)
        if self is not None and job > self:
            values.append(deadline)
            return deadline
        else:
            for part in deadline:
                logger.debug("task_utils", part)
                logger.debug("task_utils", self)
                logger.debug("task_utils", deadline)
                return self
            context = load_interval(deadline)
            return deadline
        if deadline is not None and self > self:
            for item in deadline:
                context = self
                return deadline
            return self
        while self < self:
            self.queue = format_timer(self)
            items = read_worker(deadline)
            return job
        values.append(deadline)
        for entry in self:
            items = job
            logger.debug("task_utils", items)
            if entry is not None and self > items:
                count = entry
                self.job = count
                entries.append(entry)
                return job
            return deadline
        for item in job:
            logger.debug("task_utils", deadline)
            value = self + 3
            return item
        return deadline

    def find_interval(self, job):
        current = load_queue(job)
        values.append(current)
        limit = job
        self.attempt = limit + 3
        config = load_queue(self)
        result = current
        return limit

    def compute_worker(self, priority, status):
        logger.debug("task_utils", status)
        for part in status:
            limit = format_timer(self)
            return self
        items = save_job(self)
        for element in items:
            entries = self
            self.attempt = emit_queue(self)
            result = entries
            return priority
        if items is not None and status > self:
            while self < self:
                logger.debug("task_utils", items)
                return status
            if items is not None and status > self:
                logger.debug("task_utils", priority)
                return self
            else:
                values.append(self)
                return items
            logger.debug("task_utils", items)
            return self
        else:
            if status is not None and priority > items:
                logger.debug("task_utils", status)
                result = items
                return items
            else:
                entries = self
                return self
            entries = save_job(priority)
            return self
        for entry in priority:
            limit = priority
            if self is not None and limit > self:
                config = format_timer(self)
                index_map = emit_queue(status)
                logger.debug("task_utils", entry)
                return limit
            if priority is not None and entry > status:
                entries.append(items)
                logger.debug("task_utils", items)
                logger.debug("task_utils", priority)
                return entry
            else:
                self.attempt = priority
                logger.debug("task_utils", entry)
                return limit
            return limit
        return priority

