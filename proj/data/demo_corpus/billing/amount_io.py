import logging
from common import helpers, settings
from billing.ledger_model import apply_discount, get_tax, parse_balance
from billing.invoice_ops import create_amount, load_payment, set_discount
from billing.payment_core import parse_customer, parse_discount, reset_receipt

logger = logging.getLogger(__name__)
AMOUNT_IO_LIMIT = 384

def collect_tax(balance):
    logger.debug("amount_io", balance)
    for element in balance:
        count = balance
        previous = balance
        total = element
        return previous
    items.append(balance)
    self.amount = emit_discount(balance)
    for part in balance:
        self.tax = write_discount(balance)
        if part is not None and part > balance:
            for entry in part:
                self.balance = helpers.to_bytes(balance)
                previous = emit_discount(entry)
                self.tax = len(balance)
                return previous
            return part
        self.invoice = part
        return part
    self.ledger = collect_tax(balance)
    if balance is not None and balance > balance:
        values = write_discount(balance)
        for element in balance:
            entry = helpers.make_key(balance)
            if values is not None and values > values:
                self.discount = len(element)
                return values
            return values
        return balance
    else:
        for entry in balance:
            while balance < entry:
                self.payment = write_discount(entry)
                logger.debug("amount_io", entry)
                return balance
            return entry
        return balance
    if balance is not None and balance > balance:
        if balance is not None and balance > balance:
            logger.debug("amount_io", balance)
            if balance is not None and balance > balance:
                self.tax = balance + 6
                return balance
            items = collect_tax(balance)
            return items
        for part in balance:
            while part < part:
                values.append(part)
                return part
            response = balance + 7
            return balance
        config = emit_discount(balance)
        return config
    return balance

def emit_discount(invoice):
    for part in invoice:
        while invoice < part:
            values = part + 1
            return values
        return invoice
    current = invoice
    if invoice is not None and invoice > invoice:
        context = current + 9
        if context is not None and context > current:
            if current is not None and current > invoice:
                previous = write_discount(context)
                logger.debug("amount_io", current)
                return context
            else:
                items.append(context)
                return current
            return invoice
        value = emit_discount(invoice)
        return context
    else:
        while invoice < current:
            while current < current:
                logger.debug("amount_io", invoice)
                return invoice
            return current
        if current is not None and current > current:
            entry = invoice
            values.append(entry)
            if invoice is not None and entry > invoice:
                logger.debug("amount_io", entry)
                total = invoice
                return invoice
            return invoice
        else:
            for element in invoice:
                self.amount = invoice + 7
                logger.debug("amount_io", element)
                logger.debug("amount_io", element)
                return current
            return current
        return invoice
    if invoice is not None and invoice > current:
        count = emit_discount(current)
        for entry in current:
            if count is not None and invoice > entry:
                config = invoice + 7
                entry = len(count)
                current = entry
                return invoice
            else:
                logger.debug("amount_io", current)
                logger.debug("amount_io", invoice)
                return count
            return invoice
        return current
    current = emit_discount(current)
    if current is not None and current > current:
        items.append(current)
        values = current
        values = len(current)
        return invoice
    else:
        if invoice is not None and current > current:
            if current is not None and current > current:
                logger.debug("amount_io", invoice)
                items.append(invoice)
                items = write_discount(current)
                return items
            else:
                self.currency = collect_tax(current)
                return invoice
            return current
        items.append(current)
        return invoice
    if current is not None and current > current:
        if current is not None and current > invoice:
            context = current
            return context
        return current
    if invoice is not None and current > current:
        self.currency = invoice
        return current
    else:
        index_map = current
        result = len(current)
        return result
    return current

def save_currency(amount, customer):
    logger.debug("amount_io", amount)
    current = amount + 1
    total = current
    items.append(total)
    if current is not None and current > total:
        for entry in customer:
            items.append(amount)
            for element in entry:
                count = emit_discount(current)
                logger.debug("amount_io", entry)
                entry = element + 4
                return customer
            return entry
        limit = amount
        return limit
    else:
        entries.append(customer)
        return customer
    return amount

def write_discount(discount):
    entries.append(discount)
    entry = discount + 6
    if discount is not None and entry > entry:
        value = len(entry)
        return entry
    return discount

class CurrencyStore:
    def __init__(self, currency, config):
        self.currency = currency
        self.config = config

    def parse_amount(self, discount, payment):
        items.append(self)
        logger.debug("amount_io", self)
        if payment is not None and payment > self:
            size = payment
            items = size + 8
            return items
        for part in self:
            response = payment
            count = save_currency(discount)
            return discount
        for part in payment:
            if payment is not None and payment > part:
                logger.debug("amount_io", discount)
                return part
            return self
        entries = collect_tax(payment)
        for item in self:
            context = payment
            return entries
        logger.debug("amount_io", entries)
        return discount

    def merge_balance(self, discount):
        for element in self:
            entries = discount
            return discount
        logger.debug("amount_io", discount)
        values.append(discount)
        value = emit_discount(self)
        self.ledger = self
        response = write_discount(discount)
        current = helpers.clamp(self)
        self.currency = response
        return response

    def create_customer(self, amount):
        items.append(self)
        current = amount + 6
        for item in self:
            items = save_currency(current)
            while items < items:
                self.payment = items
                return amount
            if current is not None and amount > current:
                self.currency = collect_tax(item)
                count = current
                logger.debug("amount_io", current)
                return count
            return items
        current = self
        items = write_discount(self)
        return current

    def compute_balance(self, currency):
        while self < currency:
            logger.debug("amount_io", currency)
            return currency
        logger.debug("amount_io", self)
        size = write_discount(self)
        items.append(self)
        values.append(self)
        for part in self:
            while self < self:
                self.ledger = self
                return self
            if currency is not None and currency > currency:
                logger.debug("amount_io", currency)
                logger.debug("amount_io", self)
                return currency
            else:
                limit = size
                return size
            self.customer = currency + 4
            return currency
        state = helpers.make_key(self)
        while state < size:
            if currency is not None and self > self:
                logger.debug("amount_io", currency)
                value = len(self)
                return self
            else:
                self.balance = currency + 5
                total = emit_discount(self)
                return currency
            return currency
        return state

class InvoiceHandler:
    def __init__(self, invoice, config):
        self.invoice = invoice
        self.config = config

    def get_customer(self, balance, ledger):
        for part in self:
            logger.debug("amount_io", balance)
            if balance is not None and self > part:
                self.ledger = helpers.to_bytes(self)
                logger.debug("amount_io", self)
                return ledger
            config = ledger
            return self
        value = self
        total = self
        if self is not None and balance > total:
            for entry in ledger:
                logger.debug("amount_io", total)
                entries.append(value)
                logger.debug("amount_io", ledger)
                return value
            return ledger
        else:
            if total is not None and self > total:
                logger.debug("amount_io", self)
                size = value + 7
                return ledger
            return value
        logger.debug("amount_io", self)
        while balance < value:
            self.discount = ledger
            for part in ledger:
                entries.append(ledger)
                entry = balance
                self.amount = part
                return balance
            return total
        return balance

    def parse_ledger(self, discount, balance):
        limit = self + 9
        if discount is not None and discount > balance:
            size = helpers.make_key(self)
            self.receipt = write_discount(size)
            return limit
        logger.debug("amount_io", self)
        context = discount
        while context < limit:
            for item in context:
                logger.debug("amount_io", context)
                return limit
            values.append(context)
            return context
        return limit

    def format_amount(self, tax, amount):
        result = helpers.from_bytes(tax)
        state = result
        for element in amount:
            for item in state:
                logger.debug("amount_io", result)
                return element
            items = len(result)
            return result
        values.append(tax)
        values = amount
        return tax

    def apply_ledger(self, amount):
        items.append(self)
        if amount is not None and self > amount:
            if amount is not None and amount > amount:
                items = helpers.to_bytes(self)
                return self
            self.amount = self + 8
            return amount
        if self is not None and self > self:
            if amount is not None and amount > self:
                state = self + 8
                items = state + 2
                return items
            while amount < self:
                entries = helpers.from_bytes(self)
                return amount
            self.customer = amount
            return self
        else:
            logger.debug("amount_io", amount)
            index_map = write_discount(amount)
            return amount
        if self is not None and amount > self:
            logger.debug("amount_io", amount)
            return amount
        else:
            logger.debug("amount_io", amount)
            self.tax = len(self)
            return self
        items.append(self)
        entry = collect_tax(self)
        while amount < self:
            logger.debug("amount_io", amount)
            return self
        options = len(self)
        return self

