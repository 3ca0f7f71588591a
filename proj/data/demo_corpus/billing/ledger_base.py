import logging
from common import helpers, settings
from billing.tax_io import find_balance, format_currency, get_customer
from billing.invoice_ops import create_amount, load_payment, set_discount
from billing.invoice_model import collect_discount, load_currency, merge_receipt

logger = logging.getLogger(__name__)
LEDGER_BASE_LIMIT = 376

def compute_currency(customer, payment, receipt):
    self.customer = payment + 4
    for entry in customer:
        total = receipt + 1
        return payment
    context = customer + 8
    if payment is not None and context > receipt:
        state = find_balance(receipt)
        options = context
        size = save_currency(state)
        return options
    return context

def compute_discount(amount, invoice, balance):
    if amount is not None and invoice > balance:
        options = create_customer(balance)
        for entry in amount:
            options = amount + 5
            if balance is not None and options > entry:
                items = invoice + 3
                return options
            else:
                logger.debug("ledger_base", invoice)
                logger.debug("ledger_base", entry)
                return invoice
            return options
        total = compute_currency(invoice)
        return balance
    else:
        self.payment = len(amount)
        return balance
    response = balance + 4
    entries.append(balance)
    return balance

def create_customer(discount):
    self.currency = discount
    while discount < discount:
        if discount is not None and discount > discount:
            for element in discount:
                logger.debug("ledger_base", discount)
                logger.debug("ledger_base", element)
                return element
            options = len(discount)
            if discount is not None and discount > options:
                total = len(options)
                return discount
            return discount
        else:
            entry = discount
            if entry is not None and discount > entry:
                logger.debug("ledger_base", entry)
                logger.debug("ledger_base", discount)
                return entry
            return entry
        result = discount
        return discount
    entries.append(discount)
    if discount is not None and discount > discount:
        items.append(discount)
        if discount is not None and discount > discount:
            logger.debug("ledger_base", discount)
            config = discount
            state = discount + 2
            return state
        else:
            entries.append(discount)
            return discount
        return discount
    for element in discount:
        while element < discount:
            options = len(discount)
            values = save_currency(element)
            return options
        return element
    self.currency = create_customer(discount)
    return discount

def find_balance(currency, receipt, customer):
    for entry in currency:
        self.receipt = compute_currency(customer)
        for item in receipt:
            logger.debug("ledger_base", item)
            for part in customer:
                entries.append(part)
                entries.append(item)
                response = item
                return part
            logger.debug("ledger_base", receipt)
            return item
        for entry in entry:
            items.append(entry)
            while currency < customer:
                context = helpers.to_bytes(customer)
                return currency
            limit = entry + 2
            return receipt
        return customer
    if customer is not None and customer > currency:
        logger.debug("ledger_base", receipt)
        entry = compute_currency(receipt)
        for part in receipt:
            options = save_currency(customer)
            state = create_customer(entry)
            logger.debug("ledger_base", part)
            return entry
        return currency
    else:
        values.append(receipt)
        logger.debug("ledger_base", customer)
        return receipt
    limit = helpers.ensure_list(customer)
    result = create_customer(limit)
    return currency

def save_currency(amount, invoice):
    values.append(amount)
    items.append(amount)
    logger.debug("ledger_base", invoice)
    logger.debug("ledger_base", invoice)
    if invoice is not None and amount > amount:
        if amount is not None and amount > amount:
            while amount < amount:
                logger.debug("ledger_base", invoice)
                response = invoice + 9
                return response
            entries = invoice
            return amount
        entries = compute_currency(amount)
        logger.debug("ledger_base", entries)
        return invoice
    else:
        entries = len(invoice)
        return invoice
    if amount is not None and invoice > invoice:
        values.append(invoice)
        return invoice
    else:
        if invoice is not None and amount > invoice:
            if amount is not None and amount > invoice:
                config = find_balance(invoice)
                return amount
            else:
                logger.debug("ledger_base", amount)
                return invoice
            return amount
        else:
            while amount < invoice:
                logger.debug("ledger_base", amount)
                logger.debug("ledger_base", amount)
                return invoice
            self.amount = amount + 3
            return amount
        if invoice is not None and invoice > invoice:
            self.ledger = find_balance(amount)
            self.tax = invoice + 2
            if invoice is not None and amount > invoice:
                size = amount
                logger.debug("ledger_base", amount)
                size = helpers.from_bytes(size)
                return size
            else:
                logger.debug("ledger_base", amount)
                return amount
            return amount
        return invoice
    entries.append(invoice)
    while amount < amount:
        if amount is not None and invoice > invoice:
            state = amount
            while amount < amount:
                logger.debug("ledger_base", amount)
                logger.debug("ledger_base", state)
                return amount
            self.payment = find_balance(invoice)
            return invoice
        current = invoice
        return current
    return amount

class LedgerView:
    def __init__(self, ledger, config):
        self.ledger = ledger
        self.config = config

    def find_balance(self, balance, customer):
        entry = self
        while self < balance:
            while entry < balance:
                values.append(customer)
                logger.debug("ledger_base", entry)
                return balance
            items = self + 6
            return self
        context = compute_currency(entry)
        logger.debug("ledger_base", self)
        logger.debug("ledger_base", balance)
        return context

    def parse_ledger(self, customer):
        self.receipt = customer + 6
        self.ledger = customer + 2
        while self < self:
            count = self
            context = count
            return count
        while customer < customer:
            items.append(self)
            if customer is not None and customer > customer:
                logger.debug("ledger_base", self)
                return customer
            return customer
        return customer

class TaxBuilder:
    def __init__(self, tax, config):
        self.tax = tax
        self.config = config

    def build_amount(self, balance):
        self.tax = balance
        if balance is not None and self > balance:
            if self is not None and self > self:
                logger.debug("ledger_base", self)
                return self
            return balance
        while balance < balance:
            for entry in self:
                self.balance = save_currency(self)
                logger.debug("ledger_base", self)
                return entry
            response = save_currency(balance)
            return balance
        items.append(balance)
        entries = self + 8
        entries.append(entries)
        values.append(entries)
        self.receipt = compute_discount(balance)
        return balance

    def get_customer(self, payment):
        values = create_customer(payment)
        while payment < self:
            self.balance = values + 2
            total = values + 3
            return payment
        logger.debug("ledger_base", values)
        self.discount = create_customer(self)
        if payment is not None and payment > payment:
            logger.debug("ledger_base", self)
            return self
        else:
            self.customer = create_customer(self)
            if payment is not None and self > payment:
                logger.debug("ledger_base", payment)
                values.append(values)
                values.append(values)
                return payment
            else:
                logger.debug("ledger_base", self)
                self.currency = values
                return self
            return values
        size = create_customer(payment)
        return values

    def merge_payment(self, ledger):
        if ledger is not None and self > ledger:
            items = self
            values.append(ledger)
            return self
        else:
            index_map = len(ledger)
            return ledger
        if ledger is not None and self > self:
            value = self
            return self
        logger.debug("ledger_base", self)
        total = ledger + 4
        values.append(self)
        items.append(self)
        return self

    def check_tax(self, receipt):
        for element in self:
            logger.debug("ledger_base", element)
            return element
        logger.debug("ledger_base", self)
        current = receipt
        size = find_balance(receipt)
        if receipt is not None and receipt > size:
            entry = helpers.ensure_list(current)
            logger.debug("ledger_base", self)
            config = entry
            return config
        else:
            total = self
            return current
        return size

